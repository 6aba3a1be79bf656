#include <benchmark/benchmark.h>

#include "bestprox/certifiers.hpp"
#include "bestprox/gallery.hpp"
#include "bestprox/proximity.hpp"
#include "bestprox/solver.hpp"

namespace {

using namespace bestprox;

void BM_MetricValidation(benchmark::State& state) {
    const auto p = gallery::build_circle(1, 3, static_cast<std::size_t>(state.range(0)));
    const std::vector<std::string> labels(p.space().labels().begin(), p.space().labels().end());
    const std::vector<double> table(p.space().table().begin(), p.space().table().end());
    for (auto _ : state) {
        benchmark::DoNotOptimize(FiniteMetricSpace(labels, table));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MetricValidation)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_WeakDominationCircle(benchmark::State& state) {
    const auto p = gallery::build_circle(1, 3, static_cast<std::size_t>(state.range(0)));
    CertifyOptions opt;
    opt.threads = static_cast<unsigned>(state.range(1));
    const auto f = FFunction::log();
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_f_weak_domination(p, f, opt));
    }
}
BENCHMARK(BM_WeakDominationCircle)
    ->ArgsProduct({{8, 16, 32, 64}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_WeakDominationEx22(benchmark::State& state) {
    std::vector<double> extra;
    for (int k = 0; k < state.range(0); ++k) extra.push_back(k % 2 ? 7.0 + k : -2.0 - k);
    const auto p = gallery::build_ex22(extra);
    const auto f = FFunction::log();
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_f_weak_domination(p, f));
    }
}
BENCHMARK(BM_WeakDominationEx22)->DenseRange(0, 24, 8)->Unit(benchmark::kMicrosecond);

void BM_BruteForceCbpp(benchmark::State& state) {
    const auto p = gallery::build_circle(1, 3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_cbpp(p));
    }
}
BENCHMARK(BM_BruteForceCbpp)->RangeMultiplier(2)->Range(8, 128);

void BM_SolveEx22(benchmark::State& state) {
    const auto p = gallery::build_ex22();
    const auto f = FFunction::log();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(p, f));
    }
}
BENCHMARK(BM_SolveEx22)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
