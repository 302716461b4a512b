#pragma once

#include <string>
#include <vector>

#include "lpfc/decoder.hpp"

namespace lpfc {

struct LpfcConfig {
    int max_iterations = 50;  // LP solves per decode
    double eps = 1e-6;        // pairwise-support threshold
    double int_tol = 1e-6;
    SolveTolerances solver{};

    DecodeTolerances decode_tols() const { return DecodeTolerances{solver, int_tol, eps}; }
};

enum class Verdict : std::uint8_t { Success, FractionalStall, NoCycleFound, IterationCap, SolverFailure };

const char* to_string(Verdict v);

struct IterationRecord {
    LpStats stats;
    double objective = 0.0;
    int cycle_length = 0; // 0 when no cycle was extracted after this solve
    int pivot_var = -1;
    char cycle_kind = '-'; // 'T' / 'Q' / '-'
};

struct DecodeOutcome {
    Verdict verdict = Verdict::SolverFailure;
    std::vector<std::uint8_t> bits; // valid for Success
    int iterations = 0;             // LP solves performed
    std::vector<IterationRecord> per_iteration;
    std::string diagnostics;
};

/// Solve; while fractional, find the shortest frustrated cycle, add its
/// triangles (a pair binding for 2-cycles), re-solve. Success requires an
/// integral, parity-valid output. FractionalStall flags an augmentation that
/// failed the cut-effectiveness check (an internal-consistency failure);
/// NoCycleFound is reported as decoding failure.
DecodeOutcome decode_lpfc(const TannerGraph& g, const LlrVector& llr, const LpfcConfig& cfg = {});

struct PairedResult {
    BasicDecodeResult basic;
    DecodeOutcome lpfc;
};

/// Both decoders on identical inputs (same graph, same LLRs).
PairedResult compare_paired(const TannerGraph& g, const LlrVector& llr, const LpfcConfig& cfg = {});

} // namespace lpfc
