#include <benchmark/benchmark.h>

#include <arrecip/ehrhart.hpp>

using namespace arrecip;

namespace {

const IntegerMatrix kHexagon{{1, 0}, {0, 1}, {1, 1}};
const IntegerMatrix kRank3{{-2, -1, 2}, {0, -2, -1}, {2, 0, -1}, {-1, -3, -3}};

void BM_CountPoints(benchmark::State& state) {
    const SubsetGeometry g(kRank3);
    for (auto _ : state) benchmark::DoNotOptimize(count_points(g, state.range(0)));
}
BENCHMARK(BM_CountPoints)->Arg(10)->Arg(100)->Arg(400);

void BM_CountTable(benchmark::State& state) {
    const SubsetGeometry g(kRank3);
    for (auto _ : state) benchmark::DoNotOptimize(count_points_table(g, state.range(0)));
}
BENCHMARK(BM_CountTable)->Arg(100)->Arg(400)->Arg(1600);

void BM_BruteForce(benchmark::State& state) {
    const SubsetGeometry g(kHexagon);
    for (auto _ : state) benchmark::DoNotOptimize(count_points_bruteforce(g, state.range(0)));
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(50);

void BM_EhrhartFit(benchmark::State& state) {
    const SubsetGeometry g(kRank3);
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_quasipoly(g));
}
BENCHMARK(BM_EhrhartFit)->Unit(benchmark::kMillisecond);

void BM_VertexDenominator(benchmark::State& state) {
    const SubsetGeometry g(kRank3);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_denominator(g));
}
BENCHMARK(BM_VertexDenominator);

}  // namespace
