#include <gtest/gtest.h>

#include <cmath>

#include "curvcalc/curvature.hpp"
#include "curvcalc/morse.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"
#include "random.hpp"

namespace curvcalc {
namespace {

using testing::fixture_embedding;

Direction dir(std::initializer_list<double> xs) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double v : xs) x[i++] = v;
  return Direction::normalized(x);
}

Direction random_direction(testing::Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = g(rng);
  return Direction::normalized(x);
}

VertexId id(const Embedding& e, const char* name) { return *e.complex().find_vertex(name); }

TEST(Direction, NormalizesAndRejectsZero) {
  EXPECT_NEAR(dir({3, 4}).vector().norm(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(dir({0, 2}).height(Eigen::Vector2d(1, 5)), -5.0);
  EXPECT_CURVCALC_ERROR(Direction::normalized(Eigen::Vector2d::Zero()), ErrorCode::kInvalidArgument);
  EXPECT_CURVCALC_ERROR(Direction::normalized(Eigen::Vector2d(NAN, 1)), ErrorCode::kInvalidArgument);
}

TEST(MorseIndex, SegmentExample) {
  const Embedding e = fixture_embedding("segment");
  const Direction x = dir({1});
  // h = -t, so the right end is the minimum.
  const int left = morse_index(e, 0, x), right = morse_index(e, 1, x);
  EXPECT_EQ(left + right, 1);
  EXPECT_EQ(std::min(left, right), 0);
}

TEST(MorseIndex, OctahedronPolesAndEquator) {
  const Embedding e = fixture_embedding("octahedron");
  const Direction up = dir({0, 0, 1});
  EXPECT_EQ(morse_index(e, id(e, "n"), up), 1);
  EXPECT_EQ(morse_index(e, id(e, "s"), up), 1);
  EXPECT_CURVCALC_ERROR(morse_index(e, id(e, "e"), up), ErrorCode::kNonGenericDirection);

  const MorseIndexReport report = morse_indices(e, up);
  EXPECT_FALSE(report.generic);
  for (const auto& [v, idx] : report.indices) {
    const bool pole = v == id(e, "n") || v == id(e, "s");
    EXPECT_EQ(idx.has_value(), pole);
  }
  EXPECT_CURVCALC_ERROR(chi_sum_check(e, up), ErrorCode::kNonGenericDirection);

  const Direction tilted = dir({0.3, 0.5, 0.8});
  EXPECT_EQ(chi_sum_check(e, tilted), 2);
  EXPECT_TRUE(morse_indices(e, tilted).generic);
}

TEST(MorseIndex, SaddleOfHollowSquareIsZero) {
  const Embedding e = fixture_embedding("hollow_square");
  const Direction x = dir({0.2, 1.0});
  long sum = 0;
  int minima = 0, maxima = 0;
  for (VertexId v : e.complex().vertices()) {
    const int k = morse_index(e, v, x);
    sum += k;
    if (k == 1) ++minima;
    if (k == -1) ++maxima;
  }
  EXPECT_EQ(sum, 0);
  EXPECT_EQ(minima, 1);
  EXPECT_EQ(maxima, 1);
}

TEST(MorseIndex, RejectsWrongDimension) {
  const Embedding e = fixture_embedding("octahedron");
  EXPECT_CURVCALC_ERROR(morse_index(e, 0, dir({1, 0})), ErrorCode::kDimensionMismatch);
}

TEST(MorseIndex, SumIsEulerCharacteristicForGenericDirections) {
  testing::Rng rng(77);
  for (const auto& f : testing::compact_fixtures()) {
    const Embedding e = fixture_embedding(f.name);
    for (int trial = 0; trial < 200; ++trial) {
      EXPECT_EQ(chi_sum_check(e, random_direction(rng, e.ambient_dimension())), f.chi) << f.name;
    }
  }
}

TEST(MorseIndex, DependsOnlyOnClosedStar) {
  const Embedding e = fixture_embedding("book");
  Eigen::MatrixXd moved = e.coordinates();
  moved.row(id(e, "p2")) << 3.0, -2.0, 0.9;
  const Embedding f(e.complex_ptr(), moved);
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Direction x = random_direction(rng, 3);
    EXPECT_EQ(morse_index(e, id(e, "p0"), x), morse_index(f, id(f, "p0"), x));
    EXPECT_EQ(morse_index(e, id(e, "p1"), x), morse_index(f, id(f, "p1"), x));
  }
}

TEST(BkCurvature, AgreesWithBanchoff) {
  for (const auto& f : testing::compact_fixtures()) {
    const Embedding e = fixture_embedding(f.name);
    const MorseCurvature bk = bk_curvature_measure(e, {40000, 9});
    EXPECT_EQ(bk.samples, 40000u);
    for (VertexId v : e.complex().vertices()) {
      const double exact = banchoff_curvature(e, v, Method::kExact).value;
      const Estimate& m = bk.measure.at(v);
      EXPECT_LE(std::abs(m.value - exact), 4 * m.std_error + 1e-12) << f.name << " vertex " << v;
    }
  }
}

TEST(BkCurvature, OctahedronIsSymmetric) {
  const Embedding e = fixture_embedding("octahedron");
  const MorseCurvature bk = bk_curvature_measure(e, {60000, 1});
  for (VertexId v : e.complex().vertices()) {
    EXPECT_NEAR(bk.measure.at(v).value, 1.0 / 3.0, 4 * bk.measure.at(v).std_error);
  }
  EXPECT_NEAR(bk.measure.total().value, 2.0, 1e-12);
}

TEST(BkCurvature, TiesAreRare) {
  const Embedding e = fixture_embedding("book");
  const MorseCurvature bk = bk_curvature_measure(e, {50000, 4});
  EXPECT_LE(static_cast<double>(bk.redraws), 1e-3 * static_cast<double>(bk.samples));
}

TEST(BkCurvature, DeterministicForSeed) {
  const Embedding e = fixture_embedding("cone_fan");
  const MorseCurvature a = bk_curvature_measure(e, {5000, 42});
  const MorseCurvature b = bk_curvature_measure(e, {5000, 42});
  for (VertexId v : e.complex().vertices()) EXPECT_EQ(a.measure.at(v).value, b.measure.at(v).value);
}

}  // namespace
}  // namespace curvcalc
