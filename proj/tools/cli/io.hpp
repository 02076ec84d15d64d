#pragma once

#include "json.hpp"

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "curvcalc/curvature.hpp"
#include "curvcalc/euler.hpp"
#include "curvcalc/product.hpp"

namespace curvcalc::cli {

using nlohmann::json;

/// 12 significant digits.
std::string format_double(double x);
/// x rounded to 12 significant digits, so that JSON dumps stay short.
double round12(double x);

std::vector<double> parse_double_list(std::string_view text);
/// "a,b,c" by vertex name. Throws Error(kUnknownVertex).
Simplex parse_simplex_names(std::string_view text, const SimplicialComplex& complex);
json simplex_names(const Simplex& s, const SimplicialComplex& complex);

json read_json_file(const std::filesystem::path& path);

/// {"cells":[{"simplex":["a","b"],"value":"1/2"}, ...]}; unlisted cells are 0.
ConstructibleFunction parse_function(const json& doc, const SimplicialComplex& complex);
json function_to_json(const ConstructibleFunction& s, const SimplicialComplex& complex);

/// {"cells":[{"cell":[["a"],["x","y"]],"value":"1"}, ...]}.
ConstructibleFunction parse_product_function(const json& doc, const ProductCellComplex& carrier);

/// {"pieces":[{"simplices":[["a","b"]],"alpha":{"a":"1","b":"0"}}, ...]}.
/// "alpha" may also be a single rational applied to every vertex of the
/// piece; it defaults to 1.
std::vector<Piece> parse_pieces(const json& doc, const SimplicialComplex& ambient);

}  // namespace curvcalc::cli
