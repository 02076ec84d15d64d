#include "random.hpp"

#include <algorithm>

#include "curvcalc/error.hpp"
#include "fixtures.hpp"

namespace curvcalc::testing {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

SimplicialComplex random_complex(Rng& rng, std::size_t max_vertices, std::size_t max_dim) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t generators = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
  std::vector<Simplex> gens;
  std::vector<char> used(n, 0);
  for (std::size_t g = 0; g < generators; ++g) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, std::min(n, max_dim + 1))(rng);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<VertexId> pick(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(size));
    for (VertexId v : pick) used[v] = 1;
    gens.emplace_back(std::move(pick));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!used[v]) gens.push_back(Simplex({static_cast<VertexId>(v)}));
  }
  return SimplicialComplex::from_maximal(std::move(gens));
}

PLFunction random_alpha(Rng& rng, const SimplicialComplex& complex) {
  std::vector<Rational> values(complex.vertex_bound());
  for (auto& v : values) v = random_rational(rng);
  return PLFunction(std::move(values));
}

ConstructibleFunction random_function(Rng& rng, std::size_t carrier_size) {
  ConstructibleFunction s(carrier_size);
  std::bernoulli_distribution on(0.5);
  for (std::size_t i = 0; i < carrier_size; ++i) {
    if (on(rng)) s.set(i, random_rational(rng));
  }
  return s;
}

std::vector<SimplicialMap> all_simplicial_maps(const std::shared_ptr<const SimplicialComplex>& source,
                                               const std::shared_ptr<const SimplicialComplex>& target) {
  const auto src = source->vertices();
  const auto tgt = target->vertices();
  std::vector<SimplicialMap> out;
  if (tgt.empty()) return out;
  std::vector<std::size_t> digit(src.size(), 0);
  while (true) {
    std::vector<VertexId> map(source->vertex_bound(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) map[src[i]] = tgt[digit[i]];
    try {
      out.emplace_back(source, target, std::move(map));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidMap) throw;
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == tgt.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

std::vector<std::shared_ptr<const SimplicialComplex>> small_complexes() {
  auto make = [](SimplicialComplex c) { return std::make_shared<const SimplicialComplex>(std::move(c)); };
  return {
      make(complex_of({{0}})),                       // point
      make(complex_of({{0, 1}})),                    // edge
      make(complex_of({{0, 1}, {1, 2}})),            // path
      make(complex_of({{0, 1}, {1, 2}, {0, 2}})),    // hollow triangle
      make(complex_of({{0, 1, 2}})),                 // filled triangle
      make(complex_of({{0, 1, 2}, {1, 2, 3}})),      // two triangles on an edge
      make(complex_of({{0, 1, 2}, {3}, {3, 4}})),    // disconnected
      make(complex_of({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})),  // tetrahedron boundary
  };
}

}  // namespace curvcalc::testing
