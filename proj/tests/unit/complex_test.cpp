#include <gtest/gtest.h>

#include "curvcalc/complex.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"

namespace curvcalc {
namespace {

using testing::complex_of;

TEST(Validate, AcceptsClosedSets) {
  const std::vector<Simplex> edge{{0}, {1}, {0, 1}};
  EXPECT_NO_THROW(validate(edge));
  const std::vector<Simplex> triangle{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  EXPECT_NO_THROW(validate(triangle));
  EXPECT_NO_THROW(validate(triangle));
}

TEST(Validate, ReportsMissingFace) {
  const std::vector<Simplex> bare{{0, 1}};
  EXPECT_CURVCALC_ERROR(validate(bare), ErrorCode::kMissingFace);
  EXPECT_CURVCALC_ERROR(SimplicialComplex::from_simplices(bare), ErrorCode::kMissingFace);
}

TEST(Complex, LinkOfApexIsOppositeEdge) {
  const SimplicialComplex t = complex_of({{0, 1, 2}});
  const SimplicialComplex link = t.link(0);
  EXPECT_EQ(link.size(), 3u);
  EXPECT_TRUE(link.contains(Simplex({1, 2})));
}

TEST(Complex, LinkOfPathInteriorVertex) {
  const SimplicialComplex p = complex_of({{0, 1}, {1, 2}});
  const SimplicialComplex link = p.link(1);
  EXPECT_EQ(link.size(), 2u);
  EXPECT_TRUE(link.contains(Simplex({0})));
  EXPECT_TRUE(link.contains(Simplex({2})));
}

TEST(Complex, OctahedronLinkIsFourCycle) {
  const auto oct = testing::fixture_complex("octahedron");
  EXPECT_EQ(oct->size(), 26u);
  for (VertexId v : oct->vertices()) {
    const SimplicialComplex link = oct->link(v);
    EXPECT_EQ(link.size(), 8u);
    EXPECT_EQ(link.euler_characteristic(), 0);
    // Brute force: link = simplices not containing v whose join with v exists.
    std::size_t count = 0;
    for (const Simplex& s : oct->simplices()) {
      if (s.contains(v)) continue;
      std::vector<VertexId> joined(s.begin(), s.end());
      joined.push_back(v);
      if (oct->contains(Simplex(joined))) ++count;
    }
    EXPECT_EQ(count, 8u);
  }
}

TEST(Complex, StarListsCofaces) {
  const SimplicialComplex t = complex_of({{0, 1, 2}});
  EXPECT_EQ(t.star(0).size(), 4u);
  EXPECT_EQ(t.closed_star(0).size(), 7u);
}

TEST(Complex, UnknownVertex) {
  const SimplicialComplex t = complex_of({{0, 1}});
  EXPECT_CURVCALC_ERROR(t.link(7), ErrorCode::kUnknownVertex);
  EXPECT_CURVCALC_ERROR(t.require_index(Simplex({0, 5})), ErrorCode::kUnknownSimplex);
}

TEST(Complex, InvariantsOfBasicShapes) {
  EXPECT_EQ(complex_of({{0, 1}, {1, 2}, {0, 2}}).euler_characteristic(), 0);
  EXPECT_EQ(complex_of({{0, 1, 2, 3}}).euler_characteristic(), 1);
  const auto f = complex_of({{0, 1, 2}}).f_vector();
  EXPECT_EQ(f, (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_EQ(complex_of({{0, 1, 2}, {2, 3}}).maximal_simplices().size(), 2u);
}

TEST(Complex, InducedSubcomplexKeepsIds) {
  const SimplicialComplex t = complex_of({{0, 1, 2}, {2, 3}});
  const std::vector<VertexId> keep{2, 3};
  const SimplicialComplex sub = t.induced_subcomplex(keep);
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_TRUE(sub.is_subcomplex_of(t));
  EXPECT_EQ(sub.vertex_bound(), t.vertex_bound());
}

TEST(PLFunction, BarycenterIsMean) {
  const PLFunction a({Rational(0), Rational(1), Rational(5)});
  EXPECT_EQ(a.at_barycenter(Simplex({0, 1, 2})), Rational(2));
  EXPECT_EQ(a.min_on(Simplex({1, 2})), Rational(1));
  EXPECT_EQ(a.max_on(Simplex({0, 2})), Rational(5));
}

}  // namespace
}  // namespace curvcalc
