#include "lpfc/lpfc_decoder.hpp"

#include <stdexcept>

#include "lpfc/augment.hpp"
#include "lpfc/implication.hpp"

namespace lpfc {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Success: return "success";
        case Verdict::FractionalStall: return "fractional-stall";
        case Verdict::NoCycleFound: return "no-cycle-found";
        case Verdict::IterationCap: return "iteration-cap";
        case Verdict::SolverFailure: return "solver-failure";
    }
    return "?";
}

DecodeOutcome decode_lpfc(const TannerGraph& g, const LlrVector& llr, const LpfcConfig& cfg) {
    if (cfg.max_iterations < 1) throw std::invalid_argument("decode_lpfc: max_iterations must be >= 1");
    DecodeOutcome out;

    BasicLp basic = build_basic_lp(g, llr);
    LinearProgram lp = std::move(basic.lp);
    BeliefLayout layout = std::move(basic.layout);

    for (int iter = 1;; ++iter) {
        const LpSolution sol = solve(lp, cfg.solver);
        out.iterations = iter;

        IterationRecord rec;
        rec.stats = lp.stats();
        rec.stats.solve_iterations = sol.iterations;

        if (sol.status != LpStatus::Optimal) {
            out.per_iteration.push_back(rec);
            out.verdict = Verdict::SolverFailure;
            out.diagnostics = "iteration " + std::to_string(iter) + ": " +
                              (sol.status == LpStatus::Infeasible ? "LP infeasible" : sol.diagnostics);
            return out;
        }
        rec.objective = sol.objective_value;

        const BeliefSolution beliefs = extract_beliefs(layout, sol);
        const Assignment assignment = classify_solution(g, beliefs, cfg.int_tol);
        if (assignment.integral) {
            out.per_iteration.push_back(rec);
            out.verdict = Verdict::Success;
            out.bits = assignment.bits;
            return out;
        }
        if (iter >= cfg.max_iterations) {
            out.per_iteration.push_back(rec);
            out.verdict = Verdict::IterationCap;
            return out;
        }

        const ImplicationGraph ig = build_implication_graph(beliefs, cfg.eps);
        const auto witness = find_frustrated_cycle(ig);
        if (!witness) {
            out.per_iteration.push_back(rec);
            out.verdict = Verdict::NoCycleFound;
            return out;
        }
        const FrustratedCycle fc = project_to_variables(ig, *witness);
        rec.cycle_length = static_cast<int>(fc.variable_cycle.size());
        rec.pivot_var = fc.pivot;
        rec.cycle_kind = fc.kind == FrustratedCycle::Kind::True ? 'T' : 'Q';
        out.per_iteration.push_back(rec);

        const int old_cols = lp.num_vars();
        Augmentation aug;
        if (fc.variable_cycle.size() == 2) {
            if (fc.edge_sources[0] == fc.edge_sources[1]) {
                out.verdict = Verdict::FractionalStall;
                out.diagnostics = "iteration " + std::to_string(iter) + ": 2-cycle with a single source clique";
                return out;
            }
            aug = bind_two_cycle(fc.variable_cycle[0], fc.variable_cycle[1], fc.edge_sources[0],
                                 fc.edge_sources[1], layout);
        } else {
            aug = emit_constraints(triangulate(fc), layout);
        }

        if (!cuts_off_solution(aug, sol, old_cols, cfg.solver)) {
            out.verdict = Verdict::FractionalStall;
            out.diagnostics = "iteration " + std::to_string(iter) +
                              ": augmentation does not cut off the current solution (cycle length " +
                              std::to_string(fc.variable_cycle.size()) + ")";
            return out;
        }
        lp = extend(lp, aug.new_vars, aug.new_rows);
    }
}

PairedResult compare_paired(const TannerGraph& g, const LlrVector& llr, const LpfcConfig& cfg) {
    PairedResult out;
    out.basic = decode_basic(g, llr, cfg.decode_tols());
    out.lpfc = decode_lpfc(g, llr, cfg);
    return out;
}

} // namespace lpfc
