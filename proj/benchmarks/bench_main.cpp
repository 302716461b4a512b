#include <benchmark/benchmark.h>

#include "lpfc/channel.hpp"
#include "lpfc/decoder.hpp"
#include "lpfc/implication.hpp"
#include "lpfc/lpfc_decoder.hpp"
#include "lpfc/tanner_graph.hpp"

namespace {

using namespace lpfc;

void BM_BuildTanner155(benchmark::State& state) {
    for (auto _ : state) {
        auto g = build_tanner155();
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_BuildTanner155);

void BM_SampleRegular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto g = sample_regular(n, 3, 4, seed++);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_SampleRegular)->Arg(60)->Arg(160);

void BM_BasicDecode(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = sample_regular(n, 3, 4, 7);
    std::uint64_t seed = 100;
    for (auto _ : state) {
        const auto llr = sample_llr(g.n, 1.0, seed++);
        auto r = decode_basic(g, llr);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BasicDecode)->Arg(60)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_LpfcDecode(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = sample_regular(n, 3, 4, 7);
    std::uint64_t seed = 100;
    for (auto _ : state) {
        const auto llr = sample_llr(g.n, 1.1, seed++);
        auto r = decode_lpfc(g, llr);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_LpfcDecode)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_ImplicationGraph(benchmark::State& state) {
    // a fractional instance found by seed search on a fixed graph
    const auto g = sample_regular(60, 3, 4, 7);
    BeliefSolution beliefs;
    std::uint64_t seed = 0;
    for (;; ++seed) {
        const auto llr = sample_llr(g.n, 1.2, seed);
        const auto r = decode_basic(g, llr);
        if (r.status == LpStatus::Optimal && !r.assignment.integral) {
            beliefs = r.beliefs;
            break;
        }
    }
    for (auto _ : state) {
        auto ig = build_implication_graph(beliefs, 1e-6);
        auto fc = find_frustrated_cycle(ig);
        benchmark::DoNotOptimize(fc);
    }
}
BENCHMARK(BM_ImplicationGraph);

} // namespace

BENCHMARK_MAIN();
