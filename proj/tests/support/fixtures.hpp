#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvcalc/complex_io.hpp"
#include "curvcalc/embedding.hpp"

namespace curvcalc::testing {

std::string fixture_path(const std::string& name);
ComplexDocument load_fixture(const std::string& name);
std::shared_ptr<const SimplicialComplex> fixture_complex(const std::string& name);
/// Embedding from the fixture's own coordinates.
Embedding fixture_embedding(const std::string& name);

struct CompactFixture {
  std::string name;
  long chi;
};
/// Embedded compact fixtures with their Euler characteristics.
const std::vector<CompactFixture>& compact_fixtures();

/// Triangle v0 v1 v2 with its edge v1 v2 split at p = lam v1 + (1 - lam) v2.
/// Vertex ids: v0 = 0, v1 = 1, v2 = 2, p = 3.
SimplicialComplex split_triangle();
/// PL function with the given corner values, linearly interpolated at p.
PLFunction split_triangle_alpha(const Rational& lam, const Rational& a0, const Rational& a1, const Rational& a2);

/// Face closure of generators written as vertex-id lists.
SimplicialComplex complex_of(std::initializer_list<std::initializer_list<VertexId>> generators);

}  // namespace curvcalc::testing
