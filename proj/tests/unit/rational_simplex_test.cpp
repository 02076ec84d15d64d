#include <gtest/gtest.h>

#include "curvcalc/rational.hpp"
#include "curvcalc/simplex.hpp"
#include "expect_error.hpp"

namespace curvcalc {
namespace {

TEST(Rational, RendersLowestTerms) {
  EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(Rational(-6, 3)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/9"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(parse_rational("-1.5E2"), Rational(-150));
}

TEST(Rational, RejectsGarbage) {
  EXPECT_CURVCALC_ERROR(parse_rational("abc"), ErrorCode::kParseError);
  EXPECT_CURVCALC_ERROR(parse_rational("1/0"), ErrorCode::kParseError);
  EXPECT_CURVCALC_ERROR(parse_rational(""), ErrorCode::kParseError);
}

TEST(Simplex, SortsAndRejectsDuplicates) {
  const Simplex s{3, 1, 2};
  EXPECT_EQ(to_string(s), "{1,2,3}");
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_CURVCALC_ERROR(Simplex({1, 1}), ErrorCode::kInvalidSimplex);
  EXPECT_CURVCALC_ERROR(Simplex(std::vector<VertexId>{}), ErrorCode::kInvalidSimplex);
}

TEST(Simplex, FacesAndOrdering) {
  const Simplex s{0, 1, 2};
  EXPECT_EQ(s.faces().size(), 7u);
  EXPECT_TRUE(Simplex({0, 2}).is_face_of(s));
  EXPECT_FALSE(Simplex({0, 3}).is_face_of(s));
  EXPECT_EQ(s.without(1), Simplex({0, 2}));
  EXPECT_LT(Simplex({5}), Simplex({0, 1}));
  EXPECT_LT(Simplex({0, 2}), Simplex({1, 2}));
}

}  // namespace
}  // namespace curvcalc
