#include <benchmark/benchmark.h>

#include <arrecip/exact_linear.hpp>

#include <random>

using namespace arrecip;

namespace {

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix m = random_matrix(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_HermiteNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntegerMatrix m = random_matrix(n, n + 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_SaturatedLattice(benchmark::State& state) {
    const IntegerMatrix m = random_matrix(9, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(saturated_lattice_basis(m));
}
BENCHMARK(BM_SaturatedLattice);

void BM_TotallyUnimodular(benchmark::State& state) {
    IntegerMatrix path(6, 7);
    for (std::size_t i = 0; i < 6; ++i) {
        path(i, i) = 1;
        path(i, i + 1) = -1;
    }
    for (auto _ : state) benchmark::DoNotOptimize(is_totally_unimodular(path));
}
BENCHMARK(BM_TotallyUnimodular);

}  // namespace
