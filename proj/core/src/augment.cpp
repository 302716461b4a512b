#include "lpfc/augment.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpfc {

namespace {

std::vector<std::uint32_t> all_configs(int size) {
    std::vector<std::uint32_t> out(std::size_t{1} << size);
    for (std::uint32_t c = 0; c < out.size(); ++c) out[c] = c;
    return out;
}

// coefficients of the (i=a, j=b) pairwise marginal of a clique table
void add_pair_marginal(SparseRow& row, const CliqueEntry& e, int i, int a, int j, int b, double sign) {
    const int pi = BeliefLayout::member_pos(e.id, i);
    const int pj = BeliefLayout::member_pos(e.id, j);
    for (std::size_t k = 0; k < e.configs.size(); ++k) {
        if (static_cast<int>((e.configs[k] >> pi) & 1u) == a && static_cast<int>((e.configs[k] >> pj) & 1u) == b)
            row.coeffs.emplace_back(e.col_offset + static_cast<int>(k), sign);
    }
}

void add_single_marginal(SparseRow& row, const CliqueEntry& e, int i, int v, double sign) {
    const int pi = BeliefLayout::member_pos(e.id, i);
    for (std::size_t k = 0; k < e.configs.size(); ++k) {
        if (static_cast<int>((e.configs[k] >> pi) & 1u) == v)
            row.coeffs.emplace_back(e.col_offset + static_cast<int>(k), sign);
    }
}

struct Emitter {
    BeliefLayout& layout;
    Augmentation& out;

    int ensure_clique(CliqueKind kind, std::vector<int> members) {
        std::sort(members.begin(), members.end());
        CliqueId id{kind, std::move(members)};
        int idx = layout.clique_index(id);
        if (idx >= 0) return idx;
        const int size = static_cast<int>(id.members.size());
        idx = layout.add_clique(std::move(id), all_configs(size));
        for (int k = 0; k < (1 << size); ++k) out.new_vars.push_back(LpVariable{0.0, 1.0, 0.0});
        return idx;
    }

    void normalization(int q) {
        const RowKey key{RowKey::CliqueNorm, q, -1, -1, -1, -1};
        if (layout.row_emitted(key)) return;
        layout.mark_row(key);
        const auto& e = layout.clique(q);
        SparseRow row;
        for (std::size_t k = 0; k < e.configs.size(); ++k)
            row.coeffs.emplace_back(e.col_offset + static_cast<int>(k), 1.0);
        row.rhs = 1.0;
        out.new_rows.push_back(std::move(row));
    }

    // four rows equating the (i,j) marginals of cliques qa and qb
    void bind_pair(int qa, int qb, int i, int j) {
        if (qa == qb) throw std::invalid_argument("bind_pair: identical cliques carry no new information");
        if (i > j) std::swap(i, j);
        const int lo = std::min(qa, qb), hi = std::max(qa, qb);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const RowKey key{RowKey::PairBind, lo, hi, i, j, a * 2 + b};
                if (layout.row_emitted(key)) continue;
                layout.mark_row(key);
                SparseRow row;
                add_pair_marginal(row, layout.clique(lo), i, a, j, b, 1.0);
                add_pair_marginal(row, layout.clique(hi), i, a, j, b, -1.0);
                row.rhs = 0.0;
                out.new_rows.push_back(std::move(row));
            }
        }
    }

    void singletons(int q) {
        const auto& e = layout.clique(q);
        for (int i : e.id.members) {
            for (int v = 0; v < 2; ++v) {
                const RowKey key{RowKey::Singleton, q, i, v, -1, -1};
                if (layout.row_emitted(key)) continue;
                layout.mark_row(key);
                SparseRow row;
                add_single_marginal(row, layout.clique(q), i, v, 1.0);
                row.coeffs.emplace_back(layout.var_col(i, v), -1.0);
                row.rhs = 0.0;
                out.new_rows.push_back(std::move(row));
            }
        }
    }
};

} // namespace

TriangulationPlan triangulate(const std::vector<int>& cycle, int anchor) {
    const int k = static_cast<int>(cycle.size());
    if (k < 3) throw std::invalid_argument("triangulate: cycle length must be >= 3");
    {
        auto sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("triangulate: cycle is not simple");
    }
    TriangulationPlan plan;
    auto it = std::find(cycle.begin(), cycle.end(), anchor);
    if (it == cycle.end()) it = std::min_element(cycle.begin(), cycle.end());
    plan.cycle.assign(it, cycle.end());
    plan.cycle.insert(plan.cycle.end(), cycle.begin(), it);
    for (int t = 1; t + 1 < k; ++t)
        plan.triangles.push_back({plan.cycle[0], plan.cycle[t], plan.cycle[t + 1]});
    return plan;
}

TriangulationPlan triangulate(const FrustratedCycle& fc) {
    TriangulationPlan plan = triangulate(fc.variable_cycle, fc.pivot);
    // rotate the edge bindings along with the cycle
    const int k = static_cast<int>(fc.variable_cycle.size());
    int shift = 0;
    while (fc.variable_cycle[shift] != plan.cycle[0]) ++shift;
    plan.edge_sources.resize(k);
    for (int t = 0; t < k; ++t) plan.edge_sources[t] = fc.edge_sources[(t + shift) % k];
    return plan;
}

Augmentation emit_constraints(const TriangulationPlan& plan, BeliefLayout& layout) {
    const int k = static_cast<int>(plan.cycle.size());
    if (static_cast<int>(plan.edge_sources.size()) != k)
        throw std::invalid_argument("emit_constraints: edge bindings missing");
    for (int src : plan.edge_sources)
        if (src < 0 || src >= static_cast<int>(layout.cliques().size()))
            throw std::invalid_argument("emit_constraints: dangling edge binding");

    Augmentation out;
    Emitter em{layout, out};

    std::vector<int> tri(k - 2);
    for (int t = 0; t < k - 2; ++t) {
        const auto& tr = plan.triangles[t];
        tri[t] = em.ensure_clique(CliqueKind::Triangle, {tr[0], tr[1], tr[2]});
        em.normalization(tri[t]);
    }

    // chords shared by consecutive triangles
    for (int t = 0; t + 1 < k - 2; ++t) em.bind_pair(tri[t], tri[t + 1], plan.cycle[0], plan.cycle[t + 2]);

    // cycle edges against their source cliques
    for (int t = 0; t < k; ++t) {
        const int u = plan.cycle[t];
        const int v = plan.cycle[(t + 1) % k];
        const int covering = t == 0 ? tri[0] : (t <= k - 2 ? tri[t - 1] : tri[k - 3]);
        const int src = plan.edge_sources[t];
        {
            const auto& mem = layout.clique(src).id.members;
            if (!std::binary_search(mem.begin(), mem.end(), u) || !std::binary_search(mem.begin(), mem.end(), v))
                throw std::invalid_argument("emit_constraints: source clique does not contain the edge pair");
        }
        em.bind_pair(covering, src, u, v);
    }

    for (int t = 0; t < k - 2; ++t) em.singletons(tri[t]);

    out.new_variable_count = static_cast<int>(out.new_vars.size());
    out.new_row_count = static_cast<int>(out.new_rows.size());
    return out;
}

Augmentation bind_two_cycle(int i, int j, int source_a, int source_b, BeliefLayout& layout) {
    if (source_a == source_b)
        throw std::invalid_argument("bind_two_cycle: identical sources carry no new information");
    for (int src : {source_a, source_b}) {
        if (src < 0 || src >= static_cast<int>(layout.cliques().size()))
            throw std::invalid_argument("bind_two_cycle: dangling source");
        const auto& mem = layout.clique(src).id.members;
        if (!std::binary_search(mem.begin(), mem.end(), i) || !std::binary_search(mem.begin(), mem.end(), j))
            throw std::invalid_argument("bind_two_cycle: source clique does not contain the pair");
    }
    Augmentation out;
    Emitter em{layout, out};
    const int q = em.ensure_clique(CliqueKind::Pair, {i, j});
    em.normalization(q);
    em.bind_pair(q, source_a, i, j);
    em.bind_pair(q, source_b, i, j);
    em.singletons(q);
    out.new_variable_count = static_cast<int>(out.new_vars.size());
    out.new_row_count = static_cast<int>(out.new_rows.size());
    return out;
}

bool cuts_off_solution(const Augmentation& aug, const LpSolution& previous, int old_num_cols,
                       const SolveTolerances& tols) {
    if (aug.new_rows.empty()) return false;
    LinearProgram sub;
    for (const auto& v : aug.new_vars) sub.add_variable(v.lo, v.hi, 0.0);
    for (const auto& r : aug.new_rows) {
        SparseRow sr;
        sr.rhs = r.rhs;
        for (const auto& [j, a] : r.coeffs) {
            if (j < old_num_cols) {
                sr.rhs -= a * previous.values[j];
            } else {
                sr.coeffs.emplace_back(j - old_num_cols, a);
            }
        }
        sub.add_row(std::move(sr));
    }
    const LpSolution sol = solve(sub, tols);
    return sol.status == LpStatus::Infeasible;
}

} // namespace lpfc
