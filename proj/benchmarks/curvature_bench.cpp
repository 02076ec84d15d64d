#include <benchmark/benchmark.h>

#include "curvcalc/curvature.hpp"
#include "curvcalc/morse.hpp"

namespace {

using namespace curvcalc;

Embedding octahedron() {
  auto x = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(
      {Simplex{0, 2, 4}, Simplex{0, 2, 5}, Simplex{0, 3, 4}, Simplex{0, 3, 5}, Simplex{1, 2, 4}, Simplex{1, 2, 5},
       Simplex{1, 3, 4}, Simplex{1, 3, 5}}));
  Eigen::MatrixXd c(6, 3);
  c << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  return Embedding(x, c);
}

void BM_BanchoffExact(benchmark::State& state) {
  const Embedding e = octahedron();
  for (auto _ : state) benchmark::DoNotOptimize(banchoff_measure(e, Method::kExact).total().value);
}
BENCHMARK(BM_BanchoffExact);

void BM_BanchoffMonteCarlo(benchmark::State& state) {
  const Embedding e = octahedron();
  const SamplingOptions opts{static_cast<std::size_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(banchoff_curvature(e, 0, Method::kMonteCarlo, opts).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BanchoffMonteCarlo)->RangeMultiplier(10)->Range(1000, 100000);

void BM_EquilateralMonteCarlo(benchmark::State& state) {
  auto x = std::make_shared<const SimplicialComplex>(
      SimplicialComplex::from_maximal({Simplex{0, 1, 2, 3}, Simplex{3, 4, 5}, Simplex{5, 6, 7}, Simplex{0, 7}}));
  const Embedding e = equilateral_embedding(x);
  for (auto _ : state) benchmark::DoNotOptimize(banchoff_curvature(e, 3, Method::kMonteCarlo, {20000, 2}).value);
}
BENCHMARK(BM_EquilateralMonteCarlo);

void BM_BkCurvature(benchmark::State& state) {
  const Embedding e = octahedron();
  for (auto _ : state) benchmark::DoNotOptimize(bk_curvature_measure(e, {20000, 3}).samples);
}
BENCHMARK(BM_BkCurvature);

}  // namespace
