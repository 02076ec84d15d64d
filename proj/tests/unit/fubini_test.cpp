#include <gtest/gtest.h>

#include <cmath>

#include "curvcalc/pushforward.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"
#include "random.hpp"

namespace curvcalc {
namespace {

using testing::fixture_complex;
using testing::fixture_embedding;

TEST(FubiniChi, UnitFunctionIsProductOfCharacteristics) {
  const std::vector<std::pair<std::vector<std::string>, long>> cases{
      {{"segment", "hollow_triangle"}, 0},
      {{"segment", "segment"}, 1},
      {{"segment", "segment", "segment"}, 1},
      {{"octahedron", "hollow_square"}, 0},
      {{"octahedron", "book"}, 2},
  };
  for (const auto& [names, chi] : cases) {
    std::vector<SimplicialComplex> factors;
    for (const auto& n : names) factors.push_back(*fixture_complex(n));
    const ProductCellComplex p(factors);
    const FubiniTriple r = fubini_chi(p, unit_function(p));
    EXPECT_TRUE(r.agree());
    EXPECT_EQ(r.direct, chi);
    EXPECT_EQ(p.euler_characteristic(), chi);
  }
}

TEST(FubiniChi, RandomFunctionsAgree) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SimplicialComplex> factors;
    const std::size_t k = 2 + trial % 2;
    for (std::size_t i = 0; i < k; ++i) factors.push_back(testing::random_complex(rng, 4, 2));
    const ProductCellComplex p(factors);
    const FubiniTriple r = fubini_chi(p, testing::random_function(rng, p.size()));
    EXPECT_TRUE(r.agree()) << r.direct << " " << r.iterated_first << " " << r.iterated_rest;
  }
}

TEST(FubiniChi, OpenCellOfSquare) {
  const SimplicialComplex seg = *fixture_complex("segment");
  const ProductCellComplex p = product(seg, seg);
  ConstructibleFunction s(p.size());
  const std::size_t e = seg.require_index(Simplex{0, 1});
  const std::vector<std::size_t> cell{e, e};
  s.set(p.index_of(cell), 1);
  const FubiniTriple r = fubini_chi(p, s);
  EXPECT_TRUE(r.agree());
  EXPECT_EQ(r.direct, 1);
  EXPECT_CURVCALC_ERROR(fubini_chi(p, ConstructibleFunction(3)), ErrorCode::kCarrierMismatch);
}

TEST(ProductCurvature, SquareAndCubeCorners) {
  const Embedding seg = fixture_embedding("segment");
  const std::vector<Embedding> square{seg, seg};
  for (const auto& row : fubini_curvature(square, {60000, 3})) {
    EXPECT_NEAR(row.factors.value, 0.25, 1e-15);
    EXPECT_NEAR(row.product.value, 0.25, 4 * row.joint_error);
  }
  const std::vector<Embedding> cube{seg, seg, seg};
  const auto rows = fubini_curvature(cube, {60000, 4});
  EXPECT_EQ(rows.size(), 8u);
  double total = 0.0;
  for (const auto& row : rows) {
    EXPECT_NEAR(row.product.value, 0.125, 4 * row.joint_error);
    total += row.product.value;
  }
  EXPECT_NEAR(total, 1.0, 0.05);
}

TEST(ProductCurvature, SegmentTimesTriangleFactorizes) {
  const std::vector<Embedding> factors{fixture_embedding("segment"), fixture_embedding("filled_triangle")};
  const auto rows = fubini_curvature(factors, {80000, 5});
  EXPECT_EQ(rows.size(), 6u);
  double total = 0.0;
  for (const auto& row : rows) {
    EXPECT_LE(std::abs(row.product.value - row.factors.value), 4 * row.joint_error);
    EXPECT_DOUBLE_EQ(row.joint_error, std::hypot(row.product.std_error, row.factors.std_error));
    total += row.factors.value;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(ProductCurvature, SingleVertexAndDeterminism) {
  const std::vector<Embedding> factors{fixture_embedding("segment"), fixture_embedding("hollow_square")};
  const std::vector<VertexId> v{0, 2};
  const Estimate a = product_curvature(factors, v, {20000, 8});
  const Estimate b = product_curvature(factors, v, {20000, 8});
  EXPECT_EQ(a.value, b.value);
  EXPECT_NEAR(a.value, 0.0, 4 * a.std_error + 1e-12);
}

}  // namespace
}  // namespace curvcalc
