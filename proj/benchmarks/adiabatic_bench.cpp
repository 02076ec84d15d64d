#include <benchmark/benchmark.h>

#include "curvcalc/adiabatic.hpp"

namespace {

using namespace curvcalc;

void BM_CurvatureDensity(benchmark::State& state) {
  const WarpFunction w = WarpFunction::builtin("sphere", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_density(w, 0.5).total());
}
BENCHMARK(BM_CurvatureDensity)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_AdiabaticSweep(benchmark::State& state) {
  const WarpFunction w = WarpFunction::builtin("torus", 10000);
  const std::vector<double> eps{0.0, 0.5, 0.9, 0.99};
  for (auto _ : state) benchmark::DoNotOptimize(adiabatic_sweep(w, eps).size());
}
BENCHMARK(BM_AdiabaticSweep);

}  // namespace
