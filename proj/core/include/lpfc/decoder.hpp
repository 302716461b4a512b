#pragma once

#include "lpfc/beliefs.hpp"
#include "lpfc/channel.hpp"
#include "lpfc/linear_program.hpp"
#include "lpfc/tanner_graph.hpp"

namespace lpfc {

struct DecodeTolerances {
    SolveTolerances solver{};  // feas 1e-7, reduced-cost 1e-9
    double int_tol = 1e-6;     // integrality threshold on b_i(1)
    double eps = 1e-6;         // support threshold for pairwise projections
};

/// The relaxation of ML decoding: variable beliefs b_i(0), b_i(1) plus one
/// belief per even-parity configuration per check (odd-parity configurations
/// are never instantiated), tied by normalization and marginalization
/// consistency. Objective cost l_i sits on b_i(1) only.
struct BasicLp {
    LinearProgram lp;
    BeliefLayout layout;
};

BasicLp build_basic_lp(const TannerGraph& g, const LlrVector& llr);

/// Classify a solved relaxation: a bit is integral when b_i(1) is within
/// int_tol of 0 or 1; ties at 0.5 stay fractional. An all-integral vector
/// failing parity is a hard internal error.
Assignment classify_solution(const TannerGraph& g, const BeliefSolution& b, double int_tol);

struct BasicDecodeResult {
    LpStatus status = LpStatus::IterationLimit;
    Assignment assignment;
    BeliefSolution beliefs;
    LpStats stats;
    std::string diagnostics;
};

BasicDecodeResult decode_basic(const TannerGraph& g, const LlrVector& llr,
                               const DecodeTolerances& tols = {});

} // namespace lpfc
