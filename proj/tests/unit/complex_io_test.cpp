#include <gtest/gtest.h>

#include "curvcalc/complex_io.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"

namespace curvcalc {
namespace {

TEST(ComplexIo, ClosesMaximalSimplices) {
  const ComplexDocument doc = parse_complex("curvcalc-complex v1\nvertices\na\nb\nc\nsimplices\na b c\n");
  EXPECT_EQ(doc.complex.size(), 7u);
  EXPECT_FALSE(doc.coordinates.has_value());
  EXPECT_FALSE(doc.alpha.has_value());
}

TEST(ComplexIo, ReadsCoordinatesAndAlpha) {
  const ComplexDocument doc = testing::load_fixture("id_on_edge");
  ASSERT_TRUE(doc.coordinates && doc.alpha);
  EXPECT_EQ(doc.coordinates->cols(), 1);
  EXPECT_EQ((*doc.alpha)(1), Rational(1));
  EXPECT_EQ(doc.complex.vertex_name(1), "b");
}

TEST(ComplexIo, WrongArityIsDimensionMismatch) {
  EXPECT_CURVCALC_ERROR(parse_complex("curvcalc-complex v1\nvertices coords=2\na 0\nb 1 1\nsimplices\na b\n"),
                        ErrorCode::kDimensionMismatch);
}

TEST(ComplexIo, ParseErrorsCarryLineNumbers) {
  try {
    parse_complex("curvcalc-complex v1\nvertices\na\nsimplices\na zz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
  EXPECT_CURVCALC_ERROR(parse_complex("bogus\n"), ErrorCode::kParseError);
  EXPECT_CURVCALC_ERROR(parse_complex("curvcalc-complex v1\nvertices\na\na\nsimplices\n"), ErrorCode::kParseError);
}

TEST(ComplexIo, OctahedronFixtureHas26Simplices) {
  EXPECT_EQ(testing::load_fixture("octahedron").complex.size(), 26u);
}

TEST(ComplexIo, RoundTripIsStable) {
  for (const auto& f : testing::compact_fixtures()) {
    const ComplexDocument doc = testing::load_fixture(f.name);
    const std::string once = serialize_complex(doc);
    const ComplexDocument again = parse_complex(once);
    EXPECT_EQ(again.complex, doc.complex) << f.name;
    EXPECT_EQ(serialize_complex(again), once) << f.name;
    ASSERT_TRUE(again.coordinates.has_value());
    EXPECT_EQ(*again.coordinates, *doc.coordinates) << f.name;
  }
}

TEST(ComplexIo, ParsesMaps) {
  auto oct = testing::fixture_complex("octahedron");
  auto path = testing::fixture_complex("path3");
  const SimplicialMap f = parse_map(read_text_file(testing::fixture_path("oct_to_path.map")), oct, path);
  EXPECT_EQ(f(*oct->find_vertex("n")), *path->find_vertex("p2"));
  EXPECT_CURVCALC_ERROR(parse_map("map v1\nn -> p2\n", oct, path), ErrorCode::kInvalidMap);
  EXPECT_CURVCALC_ERROR(parse_map("map v1\nn => p2\n", oct, path), ErrorCode::kParseError);
}

}  // namespace
}  // namespace curvcalc
