#include "lpfc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lpfc/channel.hpp"
#include "lpfc/rng.hpp"

namespace lpfc {

namespace {

constexpr std::uint64_t kCodeSeedTag = 0xc0de5eed1234abcdULL;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string fmt_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

} // namespace

double design_rate(const CodeSpec& spec, const TannerGraph& g) {
    switch (spec.kind) {
        case CodeSpec::Kind::Ensemble: return 1.0 - static_cast<double>(spec.dl) / spec.dr;
        case CodeSpec::Kind::Tanner155: return 2.0 / 5.0;
        case CodeSpec::Kind::Alist: return 1.0 - static_cast<double>(g.m) / g.n;
    }
    return 0.5;
}

RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg;
    bool have_kind = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "code.kind") {
            if (val == "alist") cfg.code.kind = CodeSpec::Kind::Alist;
            else if (val == "ensemble") cfg.code.kind = CodeSpec::Kind::Ensemble;
            else if (val == "tanner155") cfg.code.kind = CodeSpec::Kind::Tanner155;
            else throw std::invalid_argument("config: unknown code.kind '" + val + "'");
            have_kind = true;
        } else if (key == "code.path") {
            cfg.code.path = val;
        } else if (key == "code.n") {
            cfg.code.n = std::stoi(val);
        } else if (key == "code.dl") {
            cfg.code.dl = std::stoi(val);
        } else if (key == "code.dr") {
            cfg.code.dr = std::stoi(val);
        } else if (key == "sigma.list") {
            cfg.sigmas.clear();
            for (const auto& tok : split(val, ',')) {
                const std::string t = trim(tok);
                if (!t.empty()) cfg.sigmas.push_back(std::stod(t));
            }
        } else if (key == "trials") {
            cfg.trials = std::stoi(val);
        } else if (key == "seed") {
            cfg.master_seed = std::stoull(val);
        } else if (key == "decoder") {
            if (val == "basic") cfg.decoder = RunConfig::DecoderSel::Basic;
            else if (val == "lpfc") cfg.decoder = RunConfig::DecoderSel::Lpfc;
            else if (val == "paired") cfg.decoder = RunConfig::DecoderSel::Paired;
            else throw std::invalid_argument("config: unknown decoder '" + val + "'");
        } else if (key == "out") {
            cfg.out = val;
        } else if (key == "wer_out") {
            cfg.wer_out = val;
        } else if (key == "threads") {
            cfg.threads = std::stoi(val);
        } else if (key == "max_iterations") {
            cfg.lpfc.max_iterations = std::stoi(val);
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
    if (!have_kind) throw std::invalid_argument("config: code.kind is required");
    if (cfg.sigmas.empty()) throw std::invalid_argument("config: sigma.list is required");
    for (double s : cfg.sigmas)
        if (!(s > 0.0)) throw std::invalid_argument("config: sigma values must be positive");
    if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    return cfg;
}

RunConfig parse_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    return parse_run_config(in);
}

std::string default_wer_path(const std::string& results_path) {
    const auto dot = results_path.rfind('.');
    const auto slash = results_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return results_path + "_wer.csv";
    return results_path.substr(0, dot) + "_wer" + results_path.substr(dot);
}

std::uint64_t trial_seed(std::uint64_t master, int sigma_index, int trial) {
    return mix_seed(master, static_cast<std::uint64_t>(sigma_index), static_cast<std::uint64_t>(trial));
}

namespace {

TannerGraph build_code(const CodeSpec& spec) {
    switch (spec.kind) {
        case CodeSpec::Kind::Alist: return load_alist_file(spec.path);
        case CodeSpec::Kind::Tanner155: return build_tanner155();
        case CodeSpec::Kind::Ensemble:
            throw std::logic_error("build_code: ensemble codes are sampled per trial");
    }
    throw std::logic_error("build_code: bad kind");
}

} // namespace

SweepResult run_sweep(const RunConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
    if (cfg.sigmas.empty()) throw std::invalid_argument("run_sweep: sigma grid is empty");

    const bool ensemble = cfg.code.kind == CodeSpec::Kind::Ensemble;
    TannerGraph fixed;
    if (!ensemble) fixed = build_code(cfg.code);

    const int S = static_cast<int>(cfg.sigmas.size());
    const int T = cfg.trials;
    SweepResult result;
    result.records.resize(static_cast<std::size_t>(S) * T);

    std::atomic<int> next{0};
    const int total = S * T;
    int nthreads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, total);

    auto worker = [&]() {
        for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
            const int si = idx / T;
            const int trial = idx % T;
            const double sigma = cfg.sigmas[si];
            TrialRecord rec;
            rec.sigma_index = si;
            rec.sigma = sigma;
            rec.trial = trial;
            rec.seed = trial_seed(cfg.master_seed, si, trial);

            const TannerGraph* graph = &fixed;
            TannerGraph sampled;
            if (ensemble) {
                sampled = sample_regular(cfg.code.n, cfg.code.dl, cfg.code.dr,
                                         SplitMix64::scramble(rec.seed ^ kCodeSeedTag));
                graph = &sampled;
            }
            rec.ebn0_db = sigma_to_ebn0_db(sigma, design_rate(cfg.code, *graph));
            const LlrVector llr = sample_llr(graph->n, sigma, rec.seed);

            const auto zero_ok = [&](const std::vector<std::uint8_t>& bits) {
                return !bits.empty() &&
                       std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
            };

            const auto t0 = std::chrono::steady_clock::now();
            const BasicDecodeResult basic = decode_basic(*graph, llr, cfg.lpfc.decode_tols());
            const auto t1 = std::chrono::steady_clock::now();
            const DecodeOutcome lpfc = decode_lpfc(*graph, llr, cfg.lpfc);
            const auto t2 = std::chrono::steady_clock::now();

            rec.basic_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rec.lpfc_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
            rec.basic_integral = basic.status == LpStatus::Optimal && basic.assignment.integral;
            rec.basic_ok = rec.basic_integral && zero_ok(basic.assignment.bits);
            rec.lpfc_verdict = lpfc.verdict;
            rec.lpfc_ok = lpfc.verdict == Verdict::Success && zero_ok(lpfc.bits);
            rec.lpfc_iters = lpfc.iterations;
            if (!lpfc.per_iteration.empty()) {
                rec.base_nnz = lpfc.per_iteration.front().stats.nonzeros;
                rec.base_rows = lpfc.per_iteration.front().stats.rows;
                rec.base_cols = lpfc.per_iteration.front().stats.cols;
                rec.final_nnz = lpfc.per_iteration.back().stats.nonzeros;
                rec.final_rows = lpfc.per_iteration.back().stats.rows;
                rec.final_cols = lpfc.per_iteration.back().stats.cols;
                for (const auto& it : lpfc.per_iteration)
                    if (it.cycle_length > 0) rec.cycle_lengths.push_back(it.cycle_length);
            }
            result.records[idx] = std::move(rec);
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    result.wer = aggregate_wer(result.records);
    return result;
}

std::vector<WerPoint> aggregate_wer(const std::vector<TrialRecord>& records) {
    std::vector<WerPoint> points;
    std::map<int, std::size_t> by_index; // sigma_index -> slot, first-seen order preserved via index
    for (const auto& r : records) {
        auto it = by_index.find(r.sigma_index);
        if (it == by_index.end()) {
            it = by_index.emplace(r.sigma_index, points.size()).first;
            points.push_back(WerPoint{r.sigma, r.ebn0_db, 0, 0, 0, 0.0, 0.0});
        }
        WerPoint& p = points[it->second];
        ++p.trials;
        if (!r.basic_ok) ++p.basic_fail;
        if (!r.lpfc_ok) ++p.lpfc_fail;
    }
    std::vector<std::pair<int, WerPoint>> ordered;
    ordered.reserve(points.size());
    for (const auto& [si, slot] : by_index) ordered.emplace_back(si, points[slot]);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    points.clear();
    for (auto& entry : ordered) {
        WerPoint p = entry.second;
        p.basic_wer = static_cast<double>(p.basic_fail) / p.trials;
        p.lpfc_wer = static_cast<double>(p.lpfc_fail) / p.trials;
        points.push_back(p);
    }
    return points;
}

void write_results_csv(const std::vector<TrialRecord>& records, std::ostream& out) {
    out << "sigma,ebn0_db,trial,seed,basic_ok,lpfc_ok,lpfc_iters,base_nnz,final_nnz,"
           "base_rows,base_cols,final_rows,final_cols,cycle_lengths\n";
    for (const auto& r : records) {
        out << fmt_double("%.10g", r.sigma) << ',' << fmt_double("%.6f", r.ebn0_db) << ',' << r.trial << ','
            << r.seed << ',' << (r.basic_ok ? 1 : 0) << ',' << (r.lpfc_ok ? 1 : 0) << ',' << r.lpfc_iters << ','
            << r.base_nnz << ',' << r.final_nnz << ',' << r.base_rows << ',' << r.base_cols << ',' << r.final_rows
            << ',' << r.final_cols << ',';
        for (std::size_t k = 0; k < r.cycle_lengths.size(); ++k) {
            if (k) out << ';';
            out << r.cycle_lengths[k];
        }
        out << '\n';
    }
}

void write_wer_csv(const std::vector<WerPoint>& points, std::ostream& out) {
    out << "sigma,ebn0_db,trials,basic_fail,lpfc_fail,basic_wer,lpfc_wer\n";
    for (const auto& p : points) {
        out << fmt_double("%.10g", p.sigma) << ',' << fmt_double("%.6f", p.ebn0_db) << ',' << p.trials << ','
            << p.basic_fail << ',' << p.lpfc_fail << ',' << fmt_double("%.8g", p.basic_wer) << ','
            << fmt_double("%.8g", p.lpfc_wer) << '\n';
    }
}

std::vector<TrialRecord> read_results_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("results csv: empty input");
    if (trim(header) !=
        "sigma,ebn0_db,trial,seed,basic_ok,lpfc_ok,lpfc_iters,base_nnz,final_nnz,base_rows,base_cols,final_rows,"
        "final_cols,cycle_lengths")
        throw std::runtime_error("results csv: unexpected header");

    std::vector<TrialRecord> records;
    std::map<std::string, int> sigma_indices;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 14) throw std::runtime_error("results csv: bad field count");
        TrialRecord r;
        r.sigma = std::stod(fields[0]);
        auto it = sigma_indices.find(fields[0]);
        if (it == sigma_indices.end()) it = sigma_indices.emplace(fields[0], static_cast<int>(sigma_indices.size())).first;
        r.sigma_index = it->second;
        r.ebn0_db = std::stod(fields[1]);
        r.trial = std::stoi(fields[2]);
        r.seed = std::stoull(fields[3]);
        r.basic_ok = fields[4] == "1";
        r.lpfc_ok = fields[5] == "1";
        r.basic_integral = r.basic_ok;
        r.lpfc_verdict = r.lpfc_ok ? Verdict::Success : Verdict::IterationCap;
        r.lpfc_iters = std::stoi(fields[6]);
        r.base_nnz = std::stoll(fields[7]);
        r.final_nnz = std::stoll(fields[8]);
        r.base_rows = std::stoi(fields[9]);
        r.base_cols = std::stoi(fields[10]);
        r.final_rows = std::stoi(fields[11]);
        r.final_cols = std::stoi(fields[12]);
        const std::string cl = trim(fields[13]);
        if (!cl.empty())
            for (const auto& tok : split(cl, ';'))
                if (!trim(tok).empty()) r.cycle_lengths.push_back(std::stoi(trim(tok)));
        records.push_back(std::move(r));
    }
    return records;
}

MlResult brute_force_ml(const TannerGraph& g, const LlrVector& llr) {
    if (static_cast<int>(llr.size()) != g.n) throw std::invalid_argument("brute_force_ml: llr length mismatch");
    const auto basis = parity_check_matrix(g).nullspace_basis();
    const int k = static_cast<int>(basis.size());
    if (k > 28) throw std::invalid_argument("brute_force_ml: code dimension " + std::to_string(k) + " exceeds 28");

    MlResult best;
    best.bits.assign(g.n, 0);
    best.objective = 0.0;

    std::vector<std::uint8_t> cur(g.n, 0);
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < count; ++i) {
        const int flip = std::countr_zero(i); // binary-reflected Gray code
        const auto& bvec = basis[flip];
        for (int b = 0; b < g.n; ++b) cur[b] ^= bvec[b];
        double obj = 0.0;
        for (int b = 0; b < g.n; ++b)
            if (cur[b]) obj += llr[b];
        if (obj < best.objective - 1e-12) {
            best.objective = obj;
            best.bits = cur;
            best.tie = false;
        } else if (std::abs(obj - best.objective) <= 1e-12) {
            best.tie = true;
            if (cur < best.bits) {
                best.bits = cur;
                best.objective = obj;
            }
        }
    }
    return best;
}

std::string complexity_report(const std::vector<TrialRecord>& records) {
    struct Acc {
        double sigma = 0, ebn0 = 0;
        long long trials = 0, basic_fail = 0, lpfc_fail = 0;
        double lp_calls_all = 0, lp_calls_fail = 0;
        double base_nnz = 0, final_nnz = 0;
        long long max_nnz = 0;
        double base_rows = 0, base_cols = 0, final_rows = 0, final_cols = 0;
    };
    std::map<int, Acc> acc;
    for (const auto& r : records) {
        Acc& a = acc[r.sigma_index];
        a.sigma = r.sigma;
        a.ebn0 = r.ebn0_db;
        ++a.trials;
        a.lp_calls_all += r.lpfc_iters;
        a.base_nnz += static_cast<double>(r.base_nnz);
        a.final_nnz += static_cast<double>(r.final_nnz);
        a.max_nnz = std::max(a.max_nnz, r.final_nnz);
        a.base_rows += r.base_rows;
        a.base_cols += r.base_cols;
        a.final_rows += r.final_rows;
        a.final_cols += r.final_cols;
        if (!r.basic_ok) {
            ++a.basic_fail;
            a.lp_calls_fail += r.lpfc_iters;
        }
        if (!r.lpfc_ok) ++a.lpfc_fail;
    }

    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%8s %7s %7s %9s %9s %11s %11s %12s %12s %13s %17s %17s\n", "SNR(dB)", "sigma",
                  "trials", "basicWER", "lpfcWER", "LPs(fail)", "LPs(all)", "nnz(base)", "nnz(final)", "nnz(max)",
                  "dims(base)", "dims(final)");
    out << buf;
    for (const auto& [si, a] : acc) {
        const double nt = static_cast<double>(a.trials);
        std::string lps_fail = "-";
        if (a.basic_fail > 0) {
            std::snprintf(buf, sizeof buf, "%.2f", a.lp_calls_fail / static_cast<double>(a.basic_fail));
            lps_fail = buf;
        }
        char dims_base[32], dims_final[32];
        std::snprintf(dims_base, sizeof dims_base, "(%.0f,%.0f)", a.base_rows / nt, a.base_cols / nt);
        std::snprintf(dims_final, sizeof dims_final, "(%.1f,%.1f)", a.final_rows / nt, a.final_cols / nt);
        std::snprintf(buf, sizeof buf, "%8.2f %7.4g %7lld %9.4f %9.4f %11s %11.2f %12.1f %12.1f %13lld %17s %17s\n",
                      a.ebn0, a.sigma, a.trials, static_cast<double>(a.basic_fail) / nt,
                      static_cast<double>(a.lpfc_fail) / nt, lps_fail.c_str(), a.lp_calls_all / nt, a.base_nnz / nt,
                      a.final_nnz / nt, a.max_nnz, dims_base, dims_final);
        out << buf;
    }
    return out.str();
}

} // namespace lpfc
