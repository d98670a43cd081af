#include <benchmark/benchmark.h>

#include <random>

#include "rht/matrix.hpp"

namespace {

rht::MatrixQ random_matrix(std::size_t rows, std::size_t cols, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-9, 9);
  rht::MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density) m.set(r, c, rht::Rational(value(rng)));
  return m;
}

// Half-filled square matrices through each elimination path.
void BM_RrefDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rht::rref(m, {n}).rank);
}
BENCHMARK(BM_RrefDense)->RangeMultiplier(2)->Range(8, 48);

void BM_RrefFractionFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rht::rref(m, {0}).rank);
}
BENCHMARK(BM_RrefFractionFree)->RangeMultiplier(2)->Range(8, 48);

void BM_RrefSparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, 2 * n, 0.05, 11);
  for (auto _ : state) benchmark::DoNotOptimize(rht::rank(m));
}
BENCHMARK(BM_RrefSparse)->RangeMultiplier(2)->Range(64, 128);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n / 2, n, 0.2, 13);
  for (auto _ : state) benchmark::DoNotOptimize(rht::kernel_basis(m).size());
}
BENCHMARK(BM_KernelBasis)->Arg(32)->Arg(96);

}  // namespace
