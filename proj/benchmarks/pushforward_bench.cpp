#include <benchmark/benchmark.h>

#include <numeric>

#include "curvcalc/pushforward.hpp"
#include "curvcalc/subdivision.hpp"

namespace {

using namespace curvcalc;

void BM_PushforwardToSimplex(benchmark::State& state) {
  // Subdivided n-simplex mapped back onto the n-simplex by sending each
  // barycenter to the last vertex of its carrier.
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<VertexId> ids(n + 1);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  auto base = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal({Simplex(ids)}));
  const Subdivision s = barycentric_subdivide(*base, PLFunction::constant(*base, 0));
  auto fine = std::make_shared<const SimplicialComplex>(s.complex);
  std::vector<VertexId> vmap(fine->vertex_bound());
  for (VertexId v = 0; v < fine->vertex_bound(); ++v) vmap[v] = base->simplex(s.carrier[v]).vertices().back();
  const SimplicialMap f(fine, base, vmap);
  const ConstructibleFunction one = unit_function(*fine);
  for (auto _ : state) benchmark::DoNotOptimize(pushforward(f, one).coefficients().data());
  state.counters["source_cells"] = static_cast<double>(fine->size());
}
BENCHMARK(BM_PushforwardToSimplex)->DenseRange(2, 5);

void BM_FubiniChi(benchmark::State& state) {
  const SimplicialComplex tet = SimplicialComplex::from_maximal({Simplex{0, 1, 2, 3}});
  const ProductCellComplex p(std::vector<SimplicialComplex>(static_cast<std::size_t>(state.range(0)), tet));
  const ConstructibleFunction one = unit_function(p);
  for (auto _ : state) benchmark::DoNotOptimize(fubini_chi(p, one).direct);
  state.counters["cells"] = static_cast<double>(p.size());
}
BENCHMARK(BM_FubiniChi)->DenseRange(2, 3);

}  // namespace
