#include "fixtures.hpp"

namespace curvcalc::testing {

std::string fixture_path(const std::string& name) { return std::string(CURVCALC_FIXTURE_DIR) + "/" + name; }

ComplexDocument load_fixture(const std::string& name) { return read_complex_file(fixture_path(name + ".cx")); }

std::shared_ptr<const SimplicialComplex> fixture_complex(const std::string& name) {
  return std::make_shared<const SimplicialComplex>(load_fixture(name).complex);
}

Embedding fixture_embedding(const std::string& name) {
  ComplexDocument doc = load_fixture(name);
  auto complex = std::make_shared<const SimplicialComplex>(doc.complex);
  return Embedding(complex, *doc.coordinates);
}

const std::vector<CompactFixture>& compact_fixtures() {
  static const std::vector<CompactFixture> list{
      {"segment", 1},   {"hollow_square", 0}, {"hollow_triangle", 0}, {"filled_triangle", 1},
      {"octahedron", 2}, {"cone_fan", 1},     {"book", 1},            {"point", 1},
      {"right_triangle", 1}, {"path3", 1},
  };
  return list;
}

SimplicialComplex split_triangle() { return complex_of({{0, 1, 3}, {0, 2, 3}}); }

PLFunction split_triangle_alpha(const Rational& lam, const Rational& a0, const Rational& a1, const Rational& a2) {
  return PLFunction({a0, a1, a2, Rational(lam * a1 + (1 - lam) * a2)});
}

SimplicialComplex complex_of(std::initializer_list<std::initializer_list<VertexId>> generators) {
  std::vector<Simplex> g;
  for (auto s : generators) g.emplace_back(s);
  return SimplicialComplex::from_maximal(std::move(g));
}

}  // namespace curvcalc::testing
