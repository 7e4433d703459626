#include <benchmark/benchmark.h>

#include "wg/characters.hpp"
#include "wg/gram.hpp"
#include "wg/weingarten.hpp"
#include "wg/zonal.hpp"

using namespace wg;

static void BM_CharacterValue(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition lambda = partitions(n)[partitions(n).size() / 2];
    Partition mu{n};
    for (auto _ : state) benchmark::DoNotOptimize(character(lambda, mu));
}
BENCHMARK(BM_CharacterValue)->Arg(8)->Arg(10)->Arg(12);

static void BM_ZonalSpherical(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (const Partition& lambda : partitions(n))
            for (const Partition& beta : partitions(n))
                benchmark::DoNotOptimize(zonal_spherical(lambda, beta));
    }
}
BENCHMARK(BM_ZonalSpherical)->Arg(3)->Arg(4);

static void BM_WgUnitary(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition alpha{n};
    for (auto _ : state) benchmark::DoNotOptimize(wg_unitary(alpha));
}
BENCHMARK(BM_WgUnitary)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GramUnitary(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition alpha{n};
    for (auto _ : state) benchmark::DoNotOptimize(gram_wg_unitary(alpha, n + 1));
}
BENCHMARK(BM_GramUnitary)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GramOrthogonal(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition beta{n};
    for (auto _ : state) benchmark::DoNotOptimize(gram_wg_orthogonal(beta, 2 * n + 1));
}
BENCHMARK(BM_GramOrthogonal)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
