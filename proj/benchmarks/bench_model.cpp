#include <benchmark/benchmark.h>

#include "rht/kahler.hpp"
#include "rht/sullivan.hpp"

namespace {

void BM_ModelProjectiveSpace(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto h = rht::ring_projective_space(k);
    auto [model, table] = rht::build_bigraded_model(h, 2 * k + 1);
    benchmark::DoNotOptimize(table.total());
  }
}
BENCHMARK(BM_ModelProjectiveSpace)->DenseRange(2, 8, 2);

void BM_ClassifyDiamond(benchmark::State& state) {
  const char label = static_cast<char>('a' + state.range(0));
  const auto h = rht::model_ring(label);
  for (auto _ : state) {
    auto v = rht::classify_dichotomy(h, 11);
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_ClassifyDiamond)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_KoszulDiamondC(benchmark::State& state) {
  auto [model, table] = rht::build_bigraded_model(rht::ring_diamond_c(), 11);
  const auto pure = rht::is_pure(model);
  for (auto _ : state) {
    auto h1 = rht::koszul_homology(*pure, 1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(h1.data());
  }
}
BENCHMARK(BM_KoszulDiamondC)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
