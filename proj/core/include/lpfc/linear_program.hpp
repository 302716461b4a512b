#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lpfc {

struct LpStats {
    int rows = 0;
    int cols = 0;
    long long nonzeros = 0;
    int solve_iterations = 0;
};

struct LpVariable {
    double lo = 0.0;
    double hi = 1.0;
    double cost = 0.0;
};

/// One sparse equality row: sum coeffs[k].second * x[coeffs[k].first] = rhs.
struct SparseRow {
    std::vector<std::pair<int, double>> coeffs;
    double rhs = 0.0;
};

/// Sparse equality-constrained LP over box-bounded variables
/// (min c'x s.t. Ax = b, lo <= x <= hi).
class LinearProgram {
public:
    int add_variable(double lo, double hi, double cost);
    void add_row(SparseRow row); // throws on dangling variable reference

    int num_vars() const { return static_cast<int>(cost_.size()); }
    int num_rows() const { return static_cast<int>(rows_.size()); }

    double cost(int j) const { return cost_[j]; }
    double lower(int j) const { return lo_[j]; }
    double upper(int j) const { return hi_[j]; }
    const std::vector<SparseRow>& rows() const { return rows_; }

    LpStats stats() const;

private:
    std::vector<double> cost_, lo_, hi_;
    std::vector<SparseRow> rows_;
};

/// A copy of `lp` grown by new bounded variables and new equality rows;
/// existing rows and columns are retained unchanged. New rows may reference
/// both old and new variables. Throws on dangling references.
LinearProgram extend(const LinearProgram& lp, std::span<const LpVariable> new_vars,
                     std::span<const SparseRow> new_rows);

/// Plain-text standard-form dump (objective, equality rows, bounds), one row
/// per line, for differential testing against external solvers.
void dump_lp(const LinearProgram& lp, std::ostream& out);

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    std::vector<double> values;
    double objective_value = 0.0;
    int iterations = 0;
    std::string diagnostics; // populated on IterationLimit
};

struct SolveTolerances {
    double feas = 1e-7;      // max equality residual / bound violation
    double opt = 1e-9;       // reduced-cost optimality threshold
    int max_iterations = 0;  // 0 = automatic (scales with problem size)
};

/// Bounded-variable revised simplex (two phases, Dantzig pricing with a
/// least-index anti-cycling fallback after stalling). Deterministic for a
/// fixed LinearProgram. A claimed Optimal is verified against `tols.feas`;
/// numerical breakdown is reported as IterationLimit with diagnostics.
LpSolution solve(const LinearProgram& lp, const SolveTolerances& tols = {});

} // namespace lpfc
