#include "lpfc/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace lpfc {

namespace {

std::vector<std::uint32_t> even_parity_configs(int degree) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t{1} << (degree - 1));
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << degree); ++mask)
        if ((std::popcount(mask) & 1) == 0) out.push_back(mask);
    return out;
}

} // namespace

BasicLp build_basic_lp(const TannerGraph& g, const LlrVector& llr) {
    if (static_cast<int>(llr.size()) != g.n) throw std::invalid_argument("build_basic_lp: llr length mismatch");

    BasicLp out;
    out.layout = BeliefLayout(g.n);
    LinearProgram& lp = out.lp;
    BeliefLayout& layout = out.layout;

    // variable-node beliefs; the x_i = 0 term of the objective vanishes
    for (int i = 0; i < g.n; ++i) {
        lp.add_variable(0.0, 1.0, 0.0);      // b_i(0)
        lp.add_variable(0.0, 1.0, llr[i]);   // b_i(1)
    }

    // check-clique beliefs over even-parity (local codeword) configurations;
    // a duplicate check (same member set) imposes the same constraint and is
    // registered once
    for (int c = 0; c < g.m; ++c) {
        CliqueId id;
        id.kind = CliqueKind::Check;
        id.members = g.check_members[c];
        std::sort(id.members.begin(), id.members.end());
        if (layout.clique_index(id) >= 0) continue;
        const int idx = layout.add_clique(id, even_parity_configs(static_cast<int>(id.members.size())));
        const auto& entry = layout.clique(idx);
        for (std::size_t k = 0; k < entry.configs.size(); ++k) lp.add_variable(0.0, 1.0, 0.0);
    }

    // normalization: b_i(0) + b_i(1) = 1
    for (int i = 0; i < g.n; ++i) {
        SparseRow row;
        row.coeffs = {{layout.var_col(i, 0), 1.0}, {layout.var_col(i, 1), 1.0}};
        row.rhs = 1.0;
        lp.add_row(std::move(row));
        layout.mark_row(RowKey{RowKey::VarNorm, i, -1, -1, -1, -1});
    }

    // consistency: b_i(v) = sum of check configs with x_i = v
    for (int q = 0; q < static_cast<int>(layout.cliques().size()); ++q) {
        const auto& entry = layout.clique(q);
        for (int pos = 0; pos < static_cast<int>(entry.id.members.size()); ++pos) {
            const int i = entry.id.members[pos];
            for (int v = 0; v < 2; ++v) {
                SparseRow row;
                row.coeffs.emplace_back(layout.var_col(i, v), 1.0);
                for (std::size_t k = 0; k < entry.configs.size(); ++k)
                    if (((entry.configs[k] >> pos) & 1u) == static_cast<unsigned>(v))
                        row.coeffs.emplace_back(entry.col_offset + static_cast<int>(k), -1.0);
                row.rhs = 0.0;
                lp.add_row(std::move(row));
                layout.mark_row(RowKey{RowKey::Singleton, q, i, v, -1, -1});
            }
        }
    }

    return out;
}

Assignment classify_solution(const TannerGraph& g, const BeliefSolution& b, double int_tol) {
    Assignment a;
    a.bits.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i) {
        const double b1 = b.var_beliefs[i][1];
        if (std::abs(b1) <= int_tol) {
            a.bits[i] = 0;
        } else if (std::abs(b1 - 1.0) <= int_tol) {
            a.bits[i] = 1;
        } else {
            a.fractional_set.push_back(i);
        }
    }
    a.integral = a.fractional_set.empty();
    if (a.integral) {
        if (!is_codeword(g, a.bits))
            throw std::logic_error("decode: integral solution violates parity (LP feasibility broken)");
    } else {
        a.bits.clear();
    }
    return a;
}

BasicDecodeResult decode_basic(const TannerGraph& g, const LlrVector& llr, const DecodeTolerances& tols) {
    BasicDecodeResult out;
    BasicLp basic = build_basic_lp(g, llr);
    LpSolution sol = solve(basic.lp, tols.solver);
    out.status = sol.status;
    out.stats = basic.lp.stats();
    out.stats.solve_iterations = sol.iterations;
    out.diagnostics = sol.diagnostics;
    if (sol.status != LpStatus::Optimal) return out;
    out.beliefs = extract_beliefs(basic.layout, sol);
    out.assignment = classify_solution(g, out.beliefs, tols.int_tol);
    return out;
}

} // namespace lpfc
