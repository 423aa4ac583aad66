#include <benchmark/benchmark.h>

#include "shorcf/measure_sim.hpp"
#include "shorcf/modular.hpp"
#include "shorcf/shor.hpp"

using namespace shorcf;

static void BM_ProbY(benchmark::State& state) {
    const std::int64_t N = 4096, p = 46, A = preimage_count(N, p, 0);
    std::int64_t y = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(prob_y(y, N, p, A));
        y = (y + 1) % N;
    }
}
BENCHMARK(BM_ProbY);

static void BM_BuildDistribution(benchmark::State& state) {
    const auto n = state.range(0);
    const auto reg = choose_register_size(n);
    const std::int64_t p = multiplicative_order(2, n);
    const auto mode = state.range(1) == 0 ? DistributionMode::conditional
                                          : DistributionMode::mixture;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_distribution(reg, p, mode, 0));
    }
    state.SetLabel(mode == DistributionMode::conditional ? "conditional" : "mixture");
}
BENCHMARK(BM_BuildDistribution)->Args({21, 0})->Args({21, 1})->Args({45, 0})->Args({45, 1});

static void BM_WindowMass(benchmark::State& state) {
    const auto reg = choose_register_size(21);
    const auto dist = build_distribution(reg, 6, DistributionMode::conditional, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(window_mass(dist, 6));
    }
}
BENCHMARK(BM_WindowMass);

static void BM_MultiplicativeOrder(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiplicative_order(2, n));
    }
}
BENCHMARK(BM_MultiplicativeOrder)->Arg(21)->Arg(4097)->Arg(65537);

static void BM_ShorFactor(benchmark::State& state) {
    ShorConfig config;
    config.n = state.range(0);
    config.seed = 29;
    for (auto _ : state) {
        benchmark::DoNotOptimize(shor_factor(config));
    }
}
BENCHMARK(BM_ShorFactor)->Arg(15)->Arg(55)->Arg(391);  // 391 = 17 * 23
