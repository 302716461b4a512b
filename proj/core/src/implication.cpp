#include "lpfc/implication.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace lpfc {

PairwiseSupport project_pairwise(const BeliefSolution& b, int clique_index, int i, int j, double eps) {
    if (clique_index < 0 || clique_index >= static_cast<int>(b.cliques.size()))
        throw std::invalid_argument("project_pairwise: bad clique index");
    const CliqueBelief& cb = b.cliques[clique_index];
    if (i == j) throw std::invalid_argument("project_pairwise: i == j");
    const int pi = BeliefLayout::member_pos(cb.id, i);
    const int pj = BeliefLayout::member_pos(cb.id, j);

    double mass[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; k < cb.configs.size(); ++k) {
        const unsigned xi = (cb.configs[k] >> pi) & 1u;
        const unsigned xj = (cb.configs[k] >> pj) & 1u;
        mass[xi * 2 + xj] += cb.values[k];
    }
    PairwiseSupport s;
    s.i = i;
    s.j = j;
    s.source_clique = clique_index;
    for (int cfg = 0; cfg < 4; ++cfg)
        if (mass[cfg] > eps) s.mask |= static_cast<std::uint8_t>(1u << cfg);
    return s;
}

ImplicationGraph::ImplicationGraph(int num_vars) : num_vars_(num_vars) {
    out_.resize(2 * num_vars);
    in_.resize(2 * num_vars);
    sources_.resize(2 * num_vars);
}

void ImplicationGraph::add_edge(int from, int to, int source_clique) {
    auto& src = sources_[from];
    const auto key = std::make_pair(to, source_clique);
    auto it = std::lower_bound(src.begin(), src.end(), key);
    if (it != src.end() && *it == key) return; // identical labeled edge
    src.insert(it, key);
    ++num_edges_;

    auto& o = out_[from];
    auto oit = std::lower_bound(o.begin(), o.end(), to);
    if (oit == o.end() || *oit != to) o.insert(oit, to);
    auto& in = in_[to];
    auto iit = std::lower_bound(in.begin(), in.end(), from);
    if (iit == in.end() || *iit != from) in.insert(iit, from);
}

bool ImplicationGraph::has_edge(int from, int to) const {
    const auto& o = out_[from];
    return std::binary_search(o.begin(), o.end(), to);
}

int ImplicationGraph::edge_source(int from, int to) const {
    const auto& src = sources_[from];
    auto it = std::lower_bound(src.begin(), src.end(), std::make_pair(to, -1));
    if (it != src.end() && it->first == to) return it->second;
    return -1;
}

std::vector<int> ImplicationGraph::edge_sources(int from, int to) const {
    std::vector<int> out;
    const auto& src = sources_[from];
    for (auto it = std::lower_bound(src.begin(), src.end(), std::make_pair(to, -1));
         it != src.end() && it->first == to; ++it)
        out.push_back(it->second);
    return out;
}

void edges_for_support(std::uint8_t mask, int i, int j, std::vector<std::pair<int, int>>& edges) {
    // config bit layout: bit (x_i*2 + x_j)
    constexpr std::uint8_t b00 = 1, b01 = 2, b10 = 4, b11 = 8;
    const int ip = literal(i, 0), im = literal(i, 1);
    const int jp = literal(j, 0), jm = literal(j, 1);
    switch (mask) {
        case (b01 | b10): // x_i != x_j
            edges.push_back({ip, jm});
            edges.push_back({im, jp});
            edges.push_back({jp, im});
            edges.push_back({jm, ip});
            break;
        case (b01 | b10 | b11): // not both zero
            edges.push_back({ip, jm});
            edges.push_back({jp, im});
            break;
        case (b01 | b10 | b00): // not both one
            edges.push_back({im, jp});
            edges.push_back({jm, ip});
            break;
        case (b00 | b11): // x_i == x_j
            edges.push_back({ip, jp});
            edges.push_back({im, jm});
            edges.push_back({jp, ip});
            edges.push_back({jm, im});
            break;
        case (b00 | b11 | b10): // x_i=0 -> x_j=0
            edges.push_back({ip, jp});
            edges.push_back({jm, im});
            break;
        case (b00 | b11 | b01): // x_i=1 -> x_j=1
            edges.push_back({im, jm});
            edges.push_back({jp, ip});
            break;
        default: // not restrictive
            break;
    }
}

ImplicationGraph build_implication_graph(const BeliefSolution& b, double eps) {
    const int n = static_cast<int>(b.var_beliefs.size());
    ImplicationGraph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int q = 0; q < static_cast<int>(b.cliques.size()); ++q) {
        const auto& members = b.cliques[q].id.members;
        if (members.size() < 2) continue;
        for (std::size_t a = 0; a < members.size(); ++a) {
            const int i = members[a];
            if (std::min(b.var_beliefs[i][0], b.var_beliefs[i][1]) <= eps) continue; // integral: isolated
            for (std::size_t c = a + 1; c < members.size(); ++c) {
                const int j = members[c];
                if (std::min(b.var_beliefs[j][0], b.var_beliefs[j][1]) <= eps) continue;
                const PairwiseSupport s = project_pairwise(b, q, i, j, eps);
                edges.clear();
                edges_for_support(s.mask, i, j, edges);
                for (const auto& [from, to] : edges) g.add_edge(from, to, q);
            }
        }
    }
    return g;
}

namespace {

std::string literal_name(int lit) {
    return std::to_string(literal_var(lit)) + (literal_value(lit) == 0 ? "+" : "-");
}

std::string clique_name(const CliqueId& id) {
    std::string s;
    switch (id.kind) {
        case CliqueKind::Check: s = "check("; break;
        case CliqueKind::Triangle: s = "triangle("; break;
        case CliqueKind::Pair: s = "pair("; break;
    }
    for (std::size_t k = 0; k < id.members.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(id.members[k]);
    }
    s += ')';
    return s;
}

} // namespace

void export_implication_graph(const ImplicationGraph& g, const BeliefSolution& b, std::ostream& out) {
    for (int from = 0; from < g.num_nodes(); ++from) {
        for (int to : g.out(from)) {
            for (int src : g.edge_sources(from, to))
                out << literal_name(from) << ' ' << literal_name(to) << ' ' << clique_name(b.cliques[src].id) << '\n';
        }
    }
}

namespace {

std::vector<int> bfs_dist(const ImplicationGraph& g, int src, bool reverse) {
    std::vector<int> dist(g.num_nodes(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : reverse ? g.in(u) : g.out(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

/// lexicographically smallest shortest path s -> t (both endpoints included)
std::vector<int> lex_shortest_path(const ImplicationGraph& g, int s, int t) {
    const auto ds = bfs_dist(g, s, false);
    const auto dt = bfs_dist(g, t, true);
    const int len = ds[t];
    if (len < 0) throw std::logic_error("lex_shortest_path: unreachable target");
    std::vector<int> path{s};
    int cur = s;
    for (int step = 0; step < len; ++step) {
        int chosen = -1;
        for (int v : g.out(cur)) {
            if (ds[v] == step + 1 && dt[v] == len - step - 1) {
                chosen = v;
                break; // out() is ascending
            }
        }
        if (chosen < 0) throw std::logic_error("lex_shortest_path: broken BFS distances");
        path.push_back(chosen);
        cur = chosen;
    }
    return path;
}

} // namespace

std::optional<FrustratedCycle> find_frustrated_cycle(const ImplicationGraph& g) {
    const int n = g.num_vars();
    int best_var = -1, best_score = 0;
    bool best_true = false;
    int best_dir = 0; // Quasi: 0 = path from lit(i,0), 1 = from lit(i,1)
    for (int i = 0; i < n; ++i) {
        const int lp = literal(i, 0), lm = literal(i, 1);
        if (g.out(lp).empty() && g.out(lm).empty()) continue;
        const int d1 = bfs_dist(g, lp, false)[lm];
        const int d2 = bfs_dist(g, lm, false)[lp];
        if (d1 < 0 && d2 < 0) continue;
        const bool is_true = d1 >= 0 && d2 >= 0;
        const int score = is_true ? d1 + d2 : (d1 >= 0 ? d1 : d2);
        if (best_var < 0 || score < best_score) {
            best_var = i;
            best_score = score;
            best_true = is_true;
            best_dir = d1 >= 0 ? 0 : 1;
        }
    }
    if (best_var < 0) return std::nullopt;

    FrustratedCycle fc;
    fc.pivot = best_var;
    fc.score = best_score;
    const int lp = literal(best_var, 0), lm = literal(best_var, 1);
    if (best_true) {
        fc.kind = FrustratedCycle::Kind::True;
        auto p1 = lex_shortest_path(g, lp, lm);
        auto p2 = lex_shortest_path(g, lm, lp);
        fc.literal_path = std::move(p1);
        fc.literal_path.insert(fc.literal_path.end(), p2.begin() + 1, p2.end());
    } else {
        fc.kind = FrustratedCycle::Kind::Quasi;
        const int s = best_dir == 0 ? lp : lm;
        fc.literal_path = lex_shortest_path(g, s, literal_negate(s));
        fc.forced_value = literal_value(literal_negate(s));
    }
    return fc;
}

namespace {

/// Cut detour loops (repeated literal) and re-pivot on opposite-polarity
/// revisits until the walk projects to a simple variable cycle. The input
/// endpoints are the two literals of one variable; that property is
/// preserved.
std::vector<int> reduce_walk(std::vector<int> path) {
    while (true) {
        const int last = static_cast<int>(path.size()) - 1;
        // smallest enclosed segment first, then earliest position
        int bs = -1, bt = -1;
        bool opposite = false;
        for (int t = 1; t <= last; ++t) {
            for (int s = t - 1; s >= 0; --s) {
                if (literal_var(path[s]) != literal_var(path[t])) continue;
                if (s == 0 && t == last) continue; // the designed closure
                if (bs < 0 || t - s < bt - bs || (t - s == bt - bs && s < bs)) {
                    bs = s;
                    bt = t;
                    opposite = path[s] != path[t];
                }
                break; // nearer s cannot beat this t with smaller span
            }
        }
        if (bs < 0) return path;
        if (!opposite) {
            // same literal: the enclosed loop is a detour; cutting it keeps
            // the implication chain intact
            path.erase(path.begin() + bs + 1, path.begin() + bt + 1);
        } else {
            // opposite polarity: the enclosed segment is itself a witness for
            // that variable; the outer chain would not survive a cut
            path = std::vector<int>(path.begin() + bs, path.begin() + bt + 1);
        }
    }
}

struct MiniGraph {
    // implication edges available from the chosen edge supports only
    ImplicationGraph g;
    explicit MiniGraph(int n) : g(n) {}
};

} // namespace

FrustratedCycle project_to_variables(const ImplicationGraph& g, const FrustratedCycle& fc) {
    // For a True witness the closed walk splits at the pivot literals; the
    // forward half is already a complete implication chain.
    std::vector<int> path = fc.literal_path;
    if (fc.kind == FrustratedCycle::Kind::True) {
        const int neg = literal_negate(path.front());
        auto it = std::find(path.begin(), path.end(), neg);
        if (it == path.end()) throw std::logic_error("project_to_variables: malformed True walk");
        path = std::vector<int>(path.begin(), it + 1);
    }
    path = reduce_walk(std::move(path));

    const int k = static_cast<int>(path.size()) - 1; // edges in the cycle
    if (k < 2) throw std::invalid_argument("project_to_variables: degenerate projection (< 2 variables)");

    FrustratedCycle out = fc;
    out.pivot = literal_var(path.front());
    out.variable_cycle.clear();
    out.edge_sources.assign(k, -1);
    out.edge_literals.clear();
    for (int t = 0; t < k; ++t) {
        out.variable_cycle.push_back(literal_var(path[t]));
        out.edge_literals.emplace_back(path[t], path[t + 1]);
        const int src = g.edge_source(path[t], path[t + 1]);
        if (src < 0) throw std::logic_error("project_to_variables: walk edge missing from graph");
        out.edge_sources[t] = src;
    }

    // re-certify the kind against the cycle's own edge supports: every edge
    // either clique's support induced between the two variables is available
    ImplicationGraph mini(g.num_vars());
    for (int t = 0; t < k; ++t) {
        const int u = literal_var(path[t]);
        const int v = literal_var(path[t + 1]);
        const int src = out.edge_sources[t];
        for (int a = 0; a < 2; ++a) {
            for (int bval = 0; bval < 2; ++bval) {
                const int from_uv = literal(u, a), to_uv = literal(v, bval);
                for (int srcq : g.edge_sources(from_uv, to_uv))
                    if (srcq == src) mini.add_edge(from_uv, to_uv, src);
                for (int srcq : g.edge_sources(to_uv, from_uv))
                    if (srcq == src) mini.add_edge(to_uv, from_uv, src);
            }
        }
    }
    const int start = path.front(), end = path.back();
    const int fwd = bfs_dist(mini, start, false)[end];
    const int rev = bfs_dist(mini, end, false)[start];
    if (fwd < 0) throw std::logic_error("project_to_variables: chain lost during reduction");
    if (rev >= 0) {
        out.kind = FrustratedCycle::Kind::True;
        out.forced_value = -1;
        auto p1 = lex_shortest_path(mini, start, end);
        auto p2 = lex_shortest_path(mini, end, start);
        out.literal_path = std::move(p1);
        out.literal_path.insert(out.literal_path.end(), p2.begin() + 1, p2.end());
    } else {
        out.kind = FrustratedCycle::Kind::Quasi;
        out.forced_value = literal_value(end);
        out.literal_path = path;
    }
    return out;
}

} // namespace lpfc
