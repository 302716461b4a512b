// Command-line front end: code generation, single decodes, Monte Carlo
// sweeps, complexity reports and paired traces.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lpfc/channel.hpp"
#include "lpfc/harness.hpp"
#include "lpfc/implication.hpp"
#include "lpfc/lpfc_decoder.hpp"
#include "lpfc/rng.hpp"
#include "lpfc/tanner_graph.hpp"

namespace {

using namespace lpfc;

// "tanner155" | "ensemble:n,dl,dr" | path to an alist file
CodeSpec parse_code_spec(const std::string& text) {
    CodeSpec spec;
    if (text == "tanner155") {
        spec.kind = CodeSpec::Kind::Tanner155;
        return spec;
    }
    if (text.rfind("ensemble:", 0) == 0) {
        spec.kind = CodeSpec::Kind::Ensemble;
        const std::string params = text.substr(9);
        if (std::sscanf(params.c_str(), "%d,%d,%d", &spec.n, &spec.dl, &spec.dr) != 3)
            throw CLI::ValidationError("--code", "expected ensemble:n,dl,dr");
        return spec;
    }
    spec.kind = CodeSpec::Kind::Alist;
    spec.path = text;
    return spec;
}

TannerGraph realize_code(const CodeSpec& spec, std::uint64_t code_seed) {
    switch (spec.kind) {
        case CodeSpec::Kind::Tanner155: return build_tanner155();
        case CodeSpec::Kind::Alist: return load_alist_file(spec.path);
        case CodeSpec::Kind::Ensemble: return sample_regular(spec.n, spec.dl, spec.dr, code_seed);
    }
    throw std::logic_error("bad code spec");
}

LlrVector read_llr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open LLR file " + path);
    LlrVector llr;
    double v;
    while (in >> v) llr.push_back(v);
    if (llr.empty()) throw std::runtime_error("LLR file " + path + " holds no values");
    return llr;
}

void print_bits(const std::vector<std::uint8_t>& bits) {
    for (auto b : bits) std::cout << int(b);
    std::cout << '\n';
}

void print_trace(const DecodeOutcome& out) {
    std::cout << "iter  rows  cols   nnz  pivots   objective  cycle  kind  pivot\n";
    for (std::size_t t = 0; t < out.per_iteration.size(); ++t) {
        const auto& r = out.per_iteration[t];
        char buf[160];
        std::snprintf(buf, sizeof buf, "%4zu %5d %5d %5lld %7d %11.6f %6d %5c %6d\n", t + 1, r.stats.rows,
                      r.stats.cols, r.stats.nonzeros, r.stats.solve_iterations, r.objective, r.cycle_length,
                      r.cycle_kind, r.pivot_var);
        std::cout << buf;
    }
}

int cmd_gen_code(const std::string& kind, int n, int dl, int dr, std::uint64_t seed, const std::string& out_path) {
    TannerGraph g;
    if (kind == "tanner155") {
        g = build_tanner155();
    } else if (kind == "ensemble") {
        g = sample_regular(n, dl, dr, seed);
    } else {
        throw CLI::ValidationError("--kind", "expected tanner155 or ensemble");
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    write_alist(g, out);
    std::cerr << "wrote " << out_path << " (n=" << g.n << ", m=" << g.m << ")\n";
    return 0;
}

int cmd_decode(const std::string& code, const std::string& llr_path, const std::string& decoder,
               std::uint64_t code_seed, int max_iters, const std::string& graph_dump) {
    const CodeSpec spec = parse_code_spec(code);
    const TannerGraph g = realize_code(spec, code_seed);
    const LlrVector llr = read_llr_file(llr_path);
    if (static_cast<int>(llr.size()) != g.n)
        throw std::runtime_error("LLR count " + std::to_string(llr.size()) + " does not match code length " +
                                 std::to_string(g.n));
    LpfcConfig cfg;
    cfg.max_iterations = max_iters;

    if (decoder == "basic") {
        const BasicDecodeResult r = decode_basic(g, llr, cfg.decode_tols());
        if (r.status != LpStatus::Optimal) {
            std::cout << "verdict: solver-failure (" << r.diagnostics << ")\n";
            return 2;
        }
        std::cout << "verdict: " << (r.assignment.integral ? "integral" : "fractional") << '\n';
        std::cout << "objective: " << r.beliefs.objective_value << '\n';
        if (r.assignment.integral) {
            std::cout << "bits: ";
            print_bits(r.assignment.bits);
        } else {
            std::cout << "fractional variables: " << r.assignment.fractional_set.size() << '\n';
            if (!graph_dump.empty()) {
                std::ofstream gd(graph_dump);
                const ImplicationGraph ig = build_implication_graph(r.beliefs, cfg.eps);
                export_implication_graph(ig, r.beliefs, gd);
                std::cerr << "implication graph written to " << graph_dump << '\n';
            }
        }
        return r.assignment.integral ? 0 : 1;
    }
    if (decoder != "lpfc") throw CLI::ValidationError("--decoder", "expected basic or lpfc");

    const DecodeOutcome out = decode_lpfc(g, llr, cfg);
    std::cout << "verdict: " << to_string(out.verdict) << '\n';
    std::cout << "lp solves: " << out.iterations << '\n';
    print_trace(out);
    if (out.verdict == Verdict::Success) {
        std::cout << "bits: ";
        print_bits(out.bits);
        return 0;
    }
    if (!out.diagnostics.empty()) std::cout << out.diagnostics << '\n';
    return 1;
}

int cmd_sweep(const std::string& config_path, RunConfig overrides, bool have_code, bool have_sigmas,
              bool have_trials, bool have_seed, bool have_out, bool have_threads) {
    RunConfig cfg;
    if (!config_path.empty()) {
        cfg = parse_run_config_file(config_path);
    } else {
        cfg = overrides;
        if (!have_code) throw CLI::ValidationError("--code", "required without --config");
        if (!have_sigmas) throw CLI::ValidationError("--sigmas", "required without --config");
    }
    if (!config_path.empty()) {
        // explicit flags override the file
        if (have_code) cfg.code = overrides.code;
        if (have_sigmas) cfg.sigmas = overrides.sigmas;
        if (have_trials) cfg.trials = overrides.trials;
        if (have_seed) cfg.master_seed = overrides.master_seed;
        if (have_out) cfg.out = overrides.out;
        if (have_threads) cfg.threads = overrides.threads;
    }
    if (cfg.wer_out.empty()) cfg.wer_out = default_wer_path(cfg.out);

    const SweepResult res = run_sweep(cfg);
    {
        std::ofstream out(cfg.out);
        if (!out) throw std::runtime_error("cannot open " + cfg.out);
        write_results_csv(res.records, out);
    }
    {
        std::ofstream out(cfg.wer_out);
        if (!out) throw std::runtime_error("cannot open " + cfg.wer_out);
        write_wer_csv(res.wer, out);
    }
    std::cerr << "wrote " << res.records.size() << " trials to " << cfg.out << ", summary to " << cfg.wer_out << '\n';
    std::cout << complexity_report(res.records);
    return 0;
}

int cmd_report(const std::string& results_path) {
    std::ifstream in(results_path);
    if (!in) throw std::runtime_error("cannot open " + results_path);
    const auto records = read_results_csv(in);
    std::cout << complexity_report(records);
    return 0;
}

int cmd_compare(const std::string& code, double sigma, std::uint64_t seed, int max_iters) {
    const CodeSpec spec = parse_code_spec(code);
    const std::uint64_t tseed = trial_seed(seed, 0, 0);
    const TannerGraph g = spec.kind == CodeSpec::Kind::Ensemble
                              ? realize_code(spec, SplitMix64::scramble(tseed ^ 0xc0de5eed1234abcdULL))
                              : realize_code(spec, 0);
    const LlrVector llr = sample_llr(g.n, sigma, tseed);

    LpfcConfig cfg;
    cfg.max_iterations = max_iters;
    const PairedResult pr = compare_paired(g, llr, cfg);

    std::cout << "sigma " << sigma << "  Eb/N0 " << sigma_to_ebn0_db(sigma, design_rate(spec, g)) << " dB  n=" << g.n
              << " m=" << g.m << '\n';
    std::cout << "basic LP: ";
    if (pr.basic.status != LpStatus::Optimal) {
        std::cout << "solver-failure\n";
    } else if (pr.basic.assignment.integral) {
        std::cout << "integral, objective " << pr.basic.beliefs.objective_value << ", ";
        print_bits(pr.basic.assignment.bits);
    } else {
        std::cout << "fractional (" << pr.basic.assignment.fractional_set.size() << " fractional vars), objective "
                  << pr.basic.beliefs.objective_value << '\n';
    }
    std::cout << "lp-fc: " << to_string(pr.lpfc.verdict) << " after " << pr.lpfc.iterations << " LP solves\n";
    if (pr.lpfc.verdict == Verdict::Success) {
        std::cout << "bits: ";
        print_bits(pr.lpfc.bits);
    }
    print_trace(pr.lpfc);
    return pr.lpfc.verdict == Verdict::Success ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP decoding of LDPC codes with adaptive frustrated-cycle constraints"};
    app.require_subcommand(1);

    // gen-code
    auto* gen = app.add_subcommand("gen-code", "emit an alist file");
    std::string gen_kind = "ensemble", gen_out = "code.alist";
    int gen_n = 160, gen_dl = 3, gen_dr = 4;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind, "tanner155 | ensemble")->capture_default_str();
    gen->add_option("--n", gen_n, "variable nodes (ensemble)")->capture_default_str();
    gen->add_option("--dl", gen_dl, "variable degree (ensemble)")->capture_default_str();
    gen->add_option("--dr", gen_dr, "check degree (ensemble)")->capture_default_str();
    gen->add_option("--seed", gen_seed, "sampling seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output path")->capture_default_str();

    // decode
    auto* dec = app.add_subcommand("decode", "decode one LLR vector from a file (one real per line)");
    std::string dec_code, dec_llr, dec_decoder = "lpfc", dec_graph_dump;
    std::uint64_t dec_code_seed = 1;
    int dec_iters = 50;
    dec->add_option("--code", dec_code, "tanner155 | ensemble:n,dl,dr | alist path")->required();
    dec->add_option("--llr", dec_llr, "LLR file")->required();
    dec->add_option("--decoder", dec_decoder, "basic | lpfc")->capture_default_str();
    dec->add_option("--code-seed", dec_code_seed, "seed for ensemble codes")->capture_default_str();
    dec->add_option("--max-iters", dec_iters, "LP solve cap")->capture_default_str();
    dec->add_option("--dump-implication-graph", dec_graph_dump, "write the implication graph (basic, fractional)");

    // sweep
    auto* sw = app.add_subcommand("sweep", "paired Monte Carlo WER sweep");
    std::string sw_config, sw_code, sw_sigmas, sw_out = "results.csv";
    int sw_trials = 200, sw_threads = 0;
    std::uint64_t sw_seed = 1;
    sw->add_option("--config", sw_config, "key=value config file");
    sw->add_option("--code", sw_code, "tanner155 | ensemble:n,dl,dr | alist path");
    sw->add_option("--sigmas", sw_sigmas, "comma-separated sigma grid");
    sw->add_option("--trials", sw_trials, "trials per sigma")->capture_default_str();
    sw->add_option("--seed", sw_seed, "master seed")->capture_default_str();
    sw->add_option("--out", sw_out, "results CSV path")->capture_default_str();
    sw->add_option("--threads", sw_threads, "worker threads (0 = hardware)")->capture_default_str();

    // report
    auto* rep = app.add_subcommand("report", "complexity table from a results CSV");
    std::string rep_results;
    rep->add_option("--results", rep_results, "results CSV")->required();

    // compare
    auto* cmp = app.add_subcommand("compare", "paired single trial with full trace");
    std::string cmp_code;
    double cmp_sigma = 1.0;
    std::uint64_t cmp_seed = 1;
    int cmp_iters = 50;
    cmp->add_option("--code", cmp_code, "tanner155 | ensemble:n,dl,dr | alist path")->required();
    cmp->add_option("--sigma", cmp_sigma, "noise standard deviation")->capture_default_str();
    cmp->add_option("--seed", cmp_seed, "master seed")->capture_default_str();
    cmp->add_option("--max-iters", cmp_iters, "LP solve cap")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_code(gen_kind, gen_n, gen_dl, gen_dr, gen_seed, gen_out);
        if (dec->parsed()) return cmd_decode(dec_code, dec_llr, dec_decoder, dec_code_seed, dec_iters, dec_graph_dump);
        if (sw->parsed()) {
            RunConfig overrides;
            const bool have_code = sw->count("--code") > 0;
            const bool have_sigmas = sw->count("--sigmas") > 0;
            if (have_code) overrides.code = parse_code_spec(sw_code);
            if (have_sigmas) {
                overrides.sigmas.clear();
                std::istringstream ss(sw_sigmas);
                std::string tok;
                while (std::getline(ss, tok, ',')) overrides.sigmas.push_back(std::stod(tok));
            }
            overrides.trials = sw_trials;
            overrides.master_seed = sw_seed;
            overrides.out = sw_out;
            overrides.threads = sw_threads;
            return cmd_sweep(sw_config, overrides, have_code, have_sigmas, sw->count("--trials") > 0,
                             sw->count("--seed") > 0, sw->count("--out") > 0, sw->count("--threads") > 0);
        }
        if (rep->parsed()) return cmd_report(rep_results);
        if (cmp->parsed()) return cmd_compare(cmp_code, cmp_sigma, cmp_seed, cmp_iters);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
