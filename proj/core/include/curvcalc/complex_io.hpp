#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "curvcalc/complex.hpp"
#include "curvcalc/simplicial_map.hpp"

namespace curvcalc {

/// Contents of a `curvcalc-complex v1` file.
///
///     curvcalc-complex v1
///     vertices coords=2 alpha     # both attributes optional
///     a 0 0 1/2                   # name, coordinates, alpha
///     b 1 0 1
///     simplices
///     a b                         # one maximal simplex per line
///
/// Vertex ids are assigned densely in listing order. Coordinates are rows of
/// `coordinates`, indexed by vertex id.
struct ComplexDocument {
  SimplicialComplex complex;
  std::optional<Eigen::MatrixXd> coordinates;
  std::optional<PLFunction> alpha;
};

/// Throws Error(kParseError) with a line number, or Error(kDimensionMismatch)
/// when a vertex line carries the wrong number of fields.
ComplexDocument parse_complex(std::string_view text);
ComplexDocument read_complex_file(const std::filesystem::path& path);

/// Canonical form: vertices in id order, then the maximal simplices of
/// positive dimension in cell order. Coordinates use 17 significant digits so
/// that parse(serialize(d)) reproduces them bit for bit.
std::string serialize_complex(const ComplexDocument& doc);

/// Parses a `map v1` file of `source-name -> target-name` lines. Throws
/// Error(kParseError) for malformed lines or unknown names and
/// Error(kInvalidMap) when a source vertex is unmapped or a simplex image is
/// not a target simplex.
SimplicialMap parse_map(std::string_view text, std::shared_ptr<const SimplicialComplex> source,
                        std::shared_ptr<const SimplicialComplex> target);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace curvcalc
