#include <benchmark/benchmark.h>

#include <arrecip/catalog.hpp>
#include <arrecip/oracle.hpp>

using namespace arrecip;

namespace {

void BM_MobiusChi(benchmark::State& state) {
    const ArrangementSpec a = root_system('B', 2).arrangement();
    const auto hs = build_hyperplanes(a, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mobius_chi(IntersectionPoset(hs, a.dimension())));
}
BENCHMARK(BM_MobiusChi)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_WhitneyChi(benchmark::State& state) {
    const ArrangementSpec a = root_system('A', 2).arrangement();
    const auto hs = build_hyperplanes(a, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(whitney_chi(hs, a.dimension()));
}
BENCHMARK(BM_WhitneyChi)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_FiniteField(benchmark::State& state) {
    const ArrangementSpec a = root_system('A', 2).arrangement();
    for (auto _ : state) benchmark::DoNotOptimize(finite_field_count(a, 1, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_FiniteField)->Arg(101)->Arg(1009);

}  // namespace
