#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpfc/lpfc_decoder.hpp"
#include "lpfc/tanner_graph.hpp"

namespace lpfc {

struct CodeSpec {
    enum class Kind : std::uint8_t { Alist, Ensemble, Tanner155 };
    Kind kind = Kind::Tanner155;
    std::string path; // alist
    int n = 0, dl = 0, dr = 0; // ensemble
};

/// Design rate used for Eb/N0 accounting: 1 - dl/dr for ensembles, 2/5 for
/// the 155 code, 1 - m/n for a loaded alist.
double design_rate(const CodeSpec& spec, const TannerGraph& g);

struct RunConfig {
    CodeSpec code;
    std::vector<double> sigmas;
    int trials = 200;
    std::uint64_t master_seed = 1;
    enum class DecoderSel : std::uint8_t { Basic, Lpfc, Paired } decoder = DecoderSel::Paired;
    std::string out = "results.csv";
    std::string wer_out; // empty = derived from `out`
    int threads = 0;     // 0 = hardware concurrency
    LpfcConfig lpfc;
};

/// Flat key=value text (code.kind, code.path, code.n, code.dl, code.dr,
/// sigma.list, trials, seed, decoder, out, wer_out, threads,
/// max_iterations). '#' starts a comment. Unknown keys are an error.
RunConfig parse_run_config(std::istream& in);
RunConfig parse_run_config_file(const std::string& path);
std::string default_wer_path(const std::string& results_path);

/// Pure function of (master seed, sigma index, trial index).
std::uint64_t trial_seed(std::uint64_t master, int sigma_index, int trial);

struct TrialRecord {
    int sigma_index = 0;
    double sigma = 0.0;
    double ebn0_db = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;
    bool basic_ok = false; // decoded to the all-zero codeword
    bool lpfc_ok = false;
    bool basic_integral = false;
    Verdict lpfc_verdict = Verdict::SolverFailure;
    int lpfc_iters = 0;
    long long base_nnz = 0, final_nnz = 0;
    int base_rows = 0, base_cols = 0, final_rows = 0, final_cols = 0;
    std::vector<int> cycle_lengths;
    double basic_ms = 0.0, lpfc_ms = 0.0;
};

struct WerPoint {
    double sigma = 0.0;
    double ebn0_db = 0.0;
    int trials = 0;
    int basic_fail = 0;
    int lpfc_fail = 0;
    double basic_wer = 0.0;
    double lpfc_wer = 0.0;
};

struct SweepResult {
    std::vector<TrialRecord> records; // ordered by (sigma index, trial)
    std::vector<WerPoint> wer;        // per sigma
};

/// Paired Monte Carlo sweep under all-zero transmission: every trial feeds
/// the same noise realization to both decoders; ensemble mode samples a fresh
/// code per trial. Embarrassingly parallel; output ordering and content are
/// deterministic for a fixed master seed. Any non-Success outcome counts as
/// a word error.
SweepResult run_sweep(const RunConfig& cfg);

std::vector<WerPoint> aggregate_wer(const std::vector<TrialRecord>& records);

void write_results_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void write_wer_csv(const std::vector<WerPoint>& points, std::ostream& out);
std::vector<TrialRecord> read_results_csv(std::istream& in);

struct MlResult {
    std::vector<std::uint8_t> bits;
    double objective = 0.0;
    bool tie = false; // another codeword attains the optimum
};

/// Exact argmin of sum l_i x_i over all codewords, by spanning the nullspace
/// basis (code dimension capped at 28). Ties break to the lexicographically
/// smallest codeword.
MlResult brute_force_ml(const TannerGraph& g, const LlrVector& llr);

/// Table-style complexity summary per sigma (LP counts, nonzeros, dims).
std::string complexity_report(const std::vector<TrialRecord>& records);

} // namespace lpfc
