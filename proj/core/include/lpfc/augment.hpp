#pragma once

#include <vector>

#include "lpfc/beliefs.hpp"
#include "lpfc/implication.hpp"
#include "lpfc/linear_program.hpp"

namespace lpfc {

/// Fan triangulation of a simple variable cycle, anchored at the frustration
/// pivot: k-cycle (v1..vk) -> k-2 triangles (v1, v_t, v_t+1).
struct TriangulationPlan {
    std::vector<int> cycle;                       // anchor first
    std::vector<std::array<int, 3>> triangles;    // role order (anchor, v_t, v_t+1)
    std::vector<int> edge_sources;                // clique index per cycle edge (t, t+1 mod k)
};

/// `anchor` is used when it lies on the cycle, otherwise the smallest index.
/// The cycle must be simple with length >= 3.
TriangulationPlan triangulate(const std::vector<int>& cycle, int anchor);

/// Same, with edge bindings carried over from the witness.
TriangulationPlan triangulate(const FrustratedCycle& fc);

/// New columns and rows to splice into the decoding LP.
struct Augmentation {
    std::vector<LpVariable> new_vars;
    std::vector<SparseRow> new_rows;
    int new_variable_count = 0;
    int new_row_count = 0;
    std::vector<CliqueId> registered; // triangle/pair cliques added by this step
};

/// Emit, per triangle: 8 belief columns in [0,1] and a normalization row;
/// per shared chord: 4 rows equating adjacent triangles' pairwise marginals;
/// per cycle edge: 4 rows tying the covering triangle's marginal to the
/// source clique's projection; per triangle vertex: 2 singleton rows tying
/// the triangle marginal to b_i. Rows and cliques already present in the
/// layout are skipped (repeat protection), so re-adding a triangle only
/// contributes missing binding rows. The layout is updated in place.
Augmentation emit_constraints(const TriangulationPlan& plan, BeliefLayout& layout);

/// Degenerate 2-cycle: one pair-clique belief bound to BOTH source cliques'
/// projections and to the singletons. Sources must be distinct cliques
/// containing the pair; identical sources throw std::invalid_argument.
Augmentation bind_two_cycle(int i, int j, int source_a, int source_b, BeliefLayout& layout);

/// Does the augmentation actually cut off `previous`? Exact check: with all
/// pre-existing columns frozen at the previous solution, the new rows form a
/// small feasibility LP over the new columns only; infeasibility means the
/// previous solution violates the added consistency system. An augmentation
/// with no new rows is never a cut.
bool cuts_off_solution(const Augmentation& aug, const LpSolution& previous, int old_num_cols,
                       const SolveTolerances& tols = {});

} // namespace lpfc
