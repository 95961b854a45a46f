#include "trimcx/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace trimcx;

namespace {

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, Scalar::characteristic() - 1);
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = Scalar::from_rep(coeff(rng));
    return m;
}

template <std::vector<int> (*Kernel)(Matrix&)>
void bm_rref(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix a = random_matrix(n, n + n / 2, 42);
    for (auto _ : state) {
        Matrix m = a;
        benchmark::DoNotOptimize(Kernel(m));
    }
    state.SetComplexityN(n);
}

} // namespace

BENCHMARK(bm_rref<kernels::rref_serial>)->Name("rref_serial")->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rref<kernels::rref_parallel>)->Name("rref_parallel")->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
