#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lpfc/beliefs.hpp"
#include "lpfc/gf2.hpp"
#include "lpfc/implication.hpp"
#include "lpfc/linear_program.hpp"
#include "lpfc/tanner_graph.hpp"

namespace lpfc::test {

// (7,4) Hamming code, checks (1,3,5,7), (2,3,6,7), (4,5,6,7)
inline const char* kHamming74Alist =
    "7 3\n"
    "3 3\n"
    "1 1 2 1 2 2 3\n"
    "4 4 4\n"
    "1 0 0\n"
    "2 0 0\n"
    "1 2 0\n"
    "3 0 0\n"
    "1 3 0\n"
    "2 3 0\n"
    "1 2 3\n"
    "1 3 5 7\n"
    "2 3 6 7\n"
    "4 5 6 7\n";

/// Every codeword by exhaustive scan over all 2^n vectors (independent of
/// the library's nullspace machinery). Only for small n.
inline std::vector<std::vector<std::uint8_t>> enumerate_codewords_exhaustive(const TannerGraph& g) {
    std::vector<std::vector<std::uint8_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
        std::vector<std::uint8_t> bits(g.n);
        for (int i = 0; i < g.n; ++i) bits[i] = (mask >> i) & 1u;
        if (is_codeword(g, bits)) out.push_back(std::move(bits));
    }
    return out;
}

/// Every codeword by spanning a basis (for n too large to scan exhaustively).
inline std::vector<std::vector<std::uint8_t>> enumerate_codewords_span(const TannerGraph& g) {
    const auto basis = parity_check_matrix(g).nullspace_basis();
    std::vector<std::vector<std::uint8_t>> out;
    const std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<std::uint8_t> bits(g.n, 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if ((mask >> b) & 1u)
                for (int i = 0; i < g.n; ++i) bits[i] ^= basis[b][i];
        out.push_back(std::move(bits));
    }
    return out;
}

struct OracleMl {
    std::vector<std::uint8_t> bits;
    double objective = 0.0;
};

/// argmin sum l_i x_i over a codeword list
inline OracleMl ml_from_list(const std::vector<std::vector<std::uint8_t>>& words, const std::vector<double>& llr) {
    OracleMl best;
    bool first = true;
    for (const auto& w : words) {
        double obj = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) obj += llr[i];
        if (first || obj < best.objective - 1e-12 ||
            (std::abs(obj - best.objective) <= 1e-12 && w < best.bits)) {
            best.bits = w;
            best.objective = obj;
            first = false;
        }
    }
    return best;
}

/// The CSP a frustrated cycle claims to witness: for each cycle edge, the
/// pairwise support of its source clique. Enumerates all assignments of the
/// cycle variables.
struct CycleCsp {
    std::vector<int> vars;                       // cycle variables
    std::vector<std::array<int, 2>> edge_pairs;  // indices INTO vars
    std::vector<std::uint8_t> edge_masks;        // support mask per edge
};

inline CycleCsp cycle_csp(const BeliefSolution& b, const FrustratedCycle& fc, double eps) {
    CycleCsp csp;
    csp.vars = fc.variable_cycle;
    const int k = static_cast<int>(fc.variable_cycle.size());
    for (int t = 0; t < k; ++t) {
        const int u = fc.variable_cycle[t];
        const int v = fc.variable_cycle[(t + 1) % k];
        const int iu = static_cast<int>(std::find(csp.vars.begin(), csp.vars.end(), u) - csp.vars.begin());
        const int iv = static_cast<int>(std::find(csp.vars.begin(), csp.vars.end(), v) - csp.vars.begin());
        csp.edge_pairs.push_back({iu, iv});
        csp.edge_masks.push_back(project_pairwise(b, fc.edge_sources[t], u, v, eps).mask);
    }
    return csp;
}

inline std::vector<std::uint32_t> csp_satisfying_assignments(const CycleCsp& csp) {
    std::vector<std::uint32_t> sat;
    const int k = static_cast<int>(csp.vars.size());
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << k); ++a) {
        bool ok = true;
        for (std::size_t e = 0; e < csp.edge_pairs.size() && ok; ++e) {
            const int xu = (a >> csp.edge_pairs[e][0]) & 1u;
            const int xv = (a >> csp.edge_pairs[e][1]) & 1u;
            ok = (csp.edge_masks[e] >> (xu * 2 + xv)) & 1u;
        }
        if (ok) sat.push_back(a);
    }
    return sat;
}

/// Exhaustive optimum of a tiny box+equality LP by enumerating basic
/// solutions: every subset of columns of size m with every bound pattern on
/// the rest. Returns infinity when infeasible.
inline double lp_vertex_oracle(const LinearProgram& lp, double tol = 1e-9) {
    const int m = lp.num_rows();
    const int n = lp.num_vars();
    double best = std::numeric_limits<double>::infinity();

    // dense A
    std::vector<std::vector<double>> A(m, std::vector<double>(n, 0.0));
    std::vector<double> rhs(m);
    for (int r = 0; r < m; ++r) {
        rhs[r] = lp.rows()[r].rhs;
        for (const auto& [j, a] : lp.rows()[r].coeffs) A[r][j] += a;
    }

    auto solve_dense = [&](const std::vector<int>& bcols, const std::vector<double>& beff,
                           std::vector<double>& xb) -> bool {
        // Gaussian elimination on the m x m basis
        std::vector<std::vector<double>> M(m, std::vector<double>(m + 1));
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) M[r][c] = A[r][bcols[c]];
            M[r][m] = beff[r];
        }
        for (int c = 0; c < m; ++c) {
            int piv = -1;
            double bestp = 1e-10;
            for (int r = c; r < m; ++r)
                if (std::abs(M[r][c]) > bestp) {
                    bestp = std::abs(M[r][c]);
                    piv = r;
                }
            if (piv < 0) return false;
            std::swap(M[c], M[piv]);
            for (int r = 0; r < m; ++r) {
                if (r == c || M[r][c] == 0.0) continue;
                const double f = M[r][c] / M[c][c];
                for (int k = c; k <= m; ++k) M[r][k] -= f * M[c][k];
            }
        }
        xb.resize(m);
        for (int c = 0; c < m; ++c) xb[c] = M[c][m] / M[c][c];
        return true;
    };

    // iterate all column subsets of size m as candidate bases
    for (std::uint32_t sel = 0; sel < (std::uint32_t{1} << n); ++sel) {
        if (std::popcount(sel) != m) continue;
        std::vector<int> bcols, ncols;
        for (int j = 0; j < n; ++j) ((sel >> j) & 1u ? bcols : ncols).push_back(j);
        const int free_count = static_cast<int>(ncols.size());
        for (std::uint32_t pat = 0; pat < (std::uint32_t{1} << free_count); ++pat) {
            std::vector<double> beff = rhs;
            double obj_nb = 0.0;
            bool skip = false;
            for (int t = 0; t < free_count; ++t) {
                const int j = ncols[t];
                const double v = ((pat >> t) & 1u) ? lp.upper(j) : lp.lower(j);
                if (std::isinf(v)) {
                    skip = true;
                    break;
                }
                obj_nb += lp.cost(j) * v;
                for (int r = 0; r < m; ++r) beff[r] -= A[r][j] * v;
            }
            if (skip) continue;
            std::vector<double> xb;
            if (!solve_dense(bcols, beff, xb)) continue;
            bool feas = true;
            double obj = obj_nb;
            for (int c = 0; c < m && feas; ++c) {
                const int j = bcols[c];
                if (xb[c] < lp.lower(j) - tol || xb[c] > lp.upper(j) + tol) feas = false;
                obj += lp.cost(j) * xb[c];
            }
            if (feas) best = std::min(best, obj);
        }
    }

    return best;
}

} // namespace lpfc::test
