#include <benchmark/benchmark.h>

#include "wg/laurent.hpp"
#include "wg/weingarten.hpp"

using namespace wg;

static void BM_LaurentExpand(benchmark::State& state) {
    RationalFunction f = wg_unitary(Partition{2, 1});
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(laurent_expand(f, order));
}
BENCHMARK(BM_LaurentExpand)->Arg(16)->Arg(32)->Arg(64);

static void BM_RationalArithmetic(benchmark::State& state) {
    RationalFunction f = wg_unitary(Partition{2, 1});
    RationalFunction g = wg_unitary(Partition{3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(f + g);
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_RationalArithmetic);

static void BM_Shift(benchmark::State& state) {
    RationalFunction f = wg_orthogonal(Partition{2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(f.shifted(1));
}
BENCHMARK(BM_Shift);

BENCHMARK_MAIN();
