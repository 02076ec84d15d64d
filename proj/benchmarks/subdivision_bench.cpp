#include <benchmark/benchmark.h>

#include <numeric>

#include "curvcalc/euler.hpp"
#include "curvcalc/subdivision.hpp"

namespace {

using namespace curvcalc;

SimplicialComplex standard_simplex(std::size_t n) {
  std::vector<VertexId> ids(n + 1);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return SimplicialComplex::from_maximal({Simplex(ids)});
}

void BM_Subdivide(benchmark::State& state) {
  const SimplicialComplex x = standard_simplex(static_cast<std::size_t>(state.range(0)));
  std::vector<Rational> values;
  for (VertexId v = 0; v < x.vertex_bound(); ++v) values.emplace_back(v + 1);
  const PLFunction a(values);
  for (auto _ : state) {
    const Subdivision s = barycentric_subdivide(x, a, 2);
    benchmark::DoNotOptimize(s.complex.size());
  }
}
BENCHMARK(BM_Subdivide)->DenseRange(1, 3);

void BM_TentativeIntegral(benchmark::State& state) {
  const SimplicialComplex x = standard_simplex(static_cast<std::size_t>(state.range(0)));
  const Subdivision s = barycentric_subdivide(x, PLFunction::constant(x, 1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(tentative_integral(s.complex, s.alpha));
  state.counters["simplices"] = static_cast<double>(s.complex.size());
}
BENCHMARK(BM_TentativeIntegral)->DenseRange(1, 3);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(signature_census(static_cast<std::size_t>(state.range(0))).total_count());
}
BENCHMARK(BM_Census)->DenseRange(2, 5);

}  // namespace
