#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lpfc/beliefs.hpp"

namespace lpfc {

/// Support of the two-variable projection of one clique belief:
/// bit (x_i*2 + x_j) of `mask` is set when the summed-out mass exceeds eps.
struct PairwiseSupport {
    int i = -1, j = -1;
    std::uint8_t mask = 0;
    int source_clique = -1; // index into BeliefSolution::cliques
};

/// Sum clique belief b over every member other than i and j. i and j must be
/// distinct members of the clique.
PairwiseSupport project_pairwise(const BeliefSolution& b, int clique_index, int i, int j, double eps);

/// Literal encoding: lit(i,0) stands for x_i = 0 ("i+"), lit(i,1) for
/// x_i = 1 ("i-").
inline int literal(int var, int value) { return 2 * var + value; }
inline int literal_var(int lit) { return lit / 2; }
inline int literal_value(int lit) { return lit & 1; }
inline int literal_negate(int lit) { return lit ^ 1; }

/// Directed logic graph on 2n literal nodes. Edges carry the clique whose
/// restrictive pairwise support induced them; parallel edges from different
/// cliques are kept.
class ImplicationGraph {
public:
    explicit ImplicationGraph(int num_vars);

    int num_vars() const { return num_vars_; }
    int num_nodes() const { return 2 * num_vars_; }
    long long num_edges() const { return num_edges_; }

    void add_edge(int from, int to, int source_clique);
    bool has_edge(int from, int to) const;

    /// neighbors deduplicated by target literal, ascending
    const std::vector<int>& out(int lit) const { return out_[lit]; }
    const std::vector<int>& in(int lit) const { return in_[lit]; }

    /// smallest source-clique index among parallel edges from->to, or -1
    int edge_source(int from, int to) const;
    /// all source cliques of the parallel edges from->to, ascending
    std::vector<int> edge_sources(int from, int to) const;

private:
    int num_vars_ = 0;
    long long num_edges_ = 0;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<std::pair<int, int>>> sources_; // per from-lit: (to, clique) sorted
};

/// Decode the restrictive-support table into implication edges: XOR and
/// equality supports give four edges, each three-element support gives two,
/// everything else none. Integral variables stay isolated.
void edges_for_support(std::uint8_t mask, int i, int j, std::vector<std::pair<int, int>>& edges);

/// Build the graph from the pairwise projections of every clique of size >= 2
/// currently in the solution (checks and added triangles/pairs alike).
ImplicationGraph build_implication_graph(const BeliefSolution& b, double eps);

/// One edge per line: "<lit> <lit> <clique>", literals as "3+"/"3-".
void export_implication_graph(const ImplicationGraph& g, const BeliefSolution& b, std::ostream& out);

struct FrustratedCycle {
    enum class Kind : std::uint8_t { True, Quasi };
    Kind kind = Kind::Quasi;
    int pivot = -1;
    int score = 0;                 // BFS hops used for selection
    int forced_value = -1;         // Quasi: the polarity forced on the pivot
    std::vector<int> literal_path; // closed walk (True) or open path (Quasi)
    // filled by project_to_variables:
    std::vector<int> variable_cycle;                 // simple, pivot first
    std::vector<int> edge_sources;                   // clique per edge (t, t+1 mod k)
    std::vector<std::pair<int, int>> edge_literals;  // literal endpoints per edge
};

/// Scan every variable for the cheapest frustration witness: both BFS
/// distances finite -> True (score = sum), exactly one -> Quasi (score =
/// that distance). Ties break to the smallest variable index, paths to the
/// lexicographically smallest shortest literal path. None when no variable
/// qualifies.
std::optional<FrustratedCycle> find_frustrated_cycle(const ImplicationGraph& g);

/// Project the literal walk to a simple variable cycle with per-edge source
/// cliques. Detour loops through a repeated literal are cut; a revisit of a
/// variable at opposite polarity re-pivots to the enclosed (shorter) witness,
/// since cutting it would break the implication chain. The returned kind is
/// re-certified against the cycle's own edge supports, so a True result's
/// supports are jointly unsatisfiable and a Quasi result's supports force
/// the pivot's polarity. Throws on degenerate projections (< 2 variables).
FrustratedCycle project_to_variables(const ImplicationGraph& g, const FrustratedCycle& fc);

} // namespace lpfc
