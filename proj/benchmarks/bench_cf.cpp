#include <benchmark/benchmark.h>

#include "shorcf/approx.hpp"
#include "shorcf/continued_fraction.hpp"

using namespace shorcf;

namespace {

// Consecutive Fibonacci numbers: the longest expansion per digit.
Rational fibonacci_ratio(int k) {
    Integer a = 1, b = 1;
    for (int i = 0; i < k; ++i) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return Rational(b, a);
}

}  // namespace

static void BM_CfFromRational(benchmark::State& state) {
    const Rational x = fibonacci_ratio(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf_from_rational(x));
    }
}
BENCHMARK(BM_CfFromRational)->Arg(32)->Arg(128)->Arg(512);

static void BM_Convergents(benchmark::State& state) {
    const auto cf = cf_from_rational(fibonacci_ratio(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ConvergentTable(cf));
    }
}
BENCHMARK(BM_Convergents)->Arg(32)->Arg(128)->Arg(512);

static void BM_CfRoundTrip(benchmark::State& state) {
    const Rational x = fibonacci_ratio(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf_to_rational(cf_from_rational(x)));
    }
}
BENCHMARK(BM_CfRoundTrip)->Arg(32)->Arg(128);

static void BM_BestApproxOracle(benchmark::State& state) {
    const Rational x(355, 113);
    const Integer d_max(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_approx_oracle(x, d_max, ApproxKind::second));
    }
}
BENCHMARK(BM_BestApproxOracle)->Arg(100)->Arg(1000);

static void BM_LegendreCheck(benchmark::State& state) {
    const Rational x(43, 19), cand(9, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(legendre_is_convergent(x, cand));
    }
}
BENCHMARK(BM_LegendreCheck);

BENCHMARK_MAIN();
