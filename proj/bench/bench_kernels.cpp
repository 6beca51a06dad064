// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "h3m/curvature.hpp"
#include "h3m/enumerate.hpp"
#include "h3m/heisenberg.hpp"
#include "h3m/sampling.hpp"
#include "h3m/verify.hpp"

using namespace h3m;

namespace {

void BM_EnumerateReference(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_flags_reference(p, q).flags);
}

void BM_Enumerate(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
    const Exec exec = state.range(2) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_flags(p, q, {exec, 0}).flags);
}

void BM_Riemann(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
    Rng rng(1);
    const HeisenbergAlgebra h(static_cast<int>(n));
    const Mat g = random_nondegenerate_symmetric(rng, n);
    const ConnectionTable c = levi_civita(h.structure(), g);
    for (auto _ : state) benchmark::DoNotOptimize(riemann(c, h.structure(), exec).data.size());
}

void BM_ParabolicInvariance(benchmark::State& state) {
    const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(parabolic_invariance(3, 3, 1, 200, exec).passed);
}

} // namespace

BENCHMARK(BM_EnumerateReference)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->ArgsProduct({{2, 3}, {2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Riemann)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParabolicInvariance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
