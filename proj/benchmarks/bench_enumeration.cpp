#include <benchmark/benchmark.h>

#include "wg/counts.hpp"
#include "wg/enumerate.hpp"

using namespace wg;

static void BM_UnitaryCensus(benchmark::State& state) {
    Partition alpha{2};
    int chi = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(unitary_map_census(alpha, chi));
}
BENCHMARK(BM_UnitaryCensus)->Arg(2)->Arg(0)->Arg(-2);

static void BM_UnitaryDeepCoefficient(benchmark::State& state) {
    // the heaviest sum-rule cell: single 3-cycle, characteristic -2
    Partition alpha{3};
    for (auto _ : state)
        benchmark::DoNotOptimize(unitary_signed_vertex_sum(alpha, -2));
}
BENCHMARK(BM_UnitaryDeepCoefficient)->Unit(benchmark::kMillisecond);

static void BM_UnitaryRecords(benchmark::State& state) {
    Partition alpha{2};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_unitary(alpha, 0));
}
BENCHMARK(BM_UnitaryRecords)->Unit(benchmark::kMillisecond);

static void BM_OrthogonalScan(benchmark::State& state) {
    Partition beta{2};
    int chi = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(orthogonal_chi_coefficient(beta, chi));
}
BENCHMARK(BM_OrthogonalScan)->Arg(2)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_MonotoneCounts(benchmark::State& state) {
    Partition alpha{2, 1};
    int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(monotone_counts(alpha, kmax));
}
BENCHMARK(BM_MonotoneCounts)->Arg(6)->Arg(8)->Arg(10);

static void BM_PalindromicMonotone(benchmark::State& state) {
    Partition beta{2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            palindromic_monotone_counts(beta, 6, HatOrder::HatLowInterleaved));
}
BENCHMARK(BM_PalindromicMonotone)->Unit(benchmark::kMillisecond);
