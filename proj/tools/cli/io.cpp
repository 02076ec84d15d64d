#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "curvcalc/complex_io.hpp"
#include "curvcalc/error.hpp"
#include "curvcalc/rational.hpp"

namespace curvcalc::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Rational rational_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::kParseError, "expected a rational as a string or an integer, got " + v.dump());
}

Simplex simplex_from_json(const json& names, const SimplicialComplex& complex) {
  if (!names.is_array() || names.empty()) {
    throw Error(ErrorCode::kParseError, "expected a nonempty list of vertex names, got " + names.dump());
  }
  std::vector<VertexId> ids;
  for (const json& n : names) {
    if (!n.is_string()) throw Error(ErrorCode::kParseError, "vertex names must be strings");
    const auto id = complex.find_vertex(n.get<std::string>());
    if (!id) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + n.get<std::string>() + "'");
    ids.push_back(*id);
  }
  return Simplex(std::move(ids));
}

const json& cells_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
    throw Error(ErrorCode::kParseError, "expected an object with a \"cells\" array");
  }
  return doc["cells"];
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view field : split(text, ',')) {
    const std::string s(trim(field));
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
      throw Error(ErrorCode::kParseError, "not a number: '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

Simplex parse_simplex_names(std::string_view text, const SimplicialComplex& complex) {
  json names = json::array();
  for (std::string_view field : split(text, ',')) names.push_back(std::string(trim(field)));
  return simplex_from_json(names, complex);
}

json simplex_names(const Simplex& s, const SimplicialComplex& complex) {
  json out = json::array();
  for (VertexId v : s) out.push_back(complex.vertex_name(v));
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

ConstructibleFunction parse_function(const json& doc, const SimplicialComplex& complex) {
  ConstructibleFunction s(complex.size());
  for (const json& cell : cells_of(doc)) {
    if (!cell.contains("simplex") || !cell.contains("value")) {
      throw Error(ErrorCode::kParseError, "each cell needs \"simplex\" and \"value\"");
    }
    s.add(complex.require_index(simplex_from_json(cell["simplex"], complex)), rational_value(cell["value"]));
  }
  return s;
}

json function_to_json(const ConstructibleFunction& s, const SimplicialComplex& complex) {
  json cells = json::array();
  for (std::size_t i = 0; i < s.carrier_size(); ++i) {
    if (s[i] == 0) continue;
    cells.push_back({{"simplex", simplex_names(complex.simplex(i), complex)}, {"value", to_string(s[i])}});
  }
  return {{"cells", std::move(cells)}};
}

ConstructibleFunction parse_product_function(const json& doc, const ProductCellComplex& carrier) {
  ConstructibleFunction s(carrier.size());
  for (const json& cell : cells_of(doc)) {
    if (!cell.contains("cell") || !cell.contains("value") || !cell["cell"].is_array() ||
        cell["cell"].size() != carrier.factor_count()) {
      throw Error(ErrorCode::kParseError, "each cell needs \"cell\" (one simplex per factor) and \"value\"");
    }
    std::vector<std::size_t> components;
    for (std::size_t k = 0; k < carrier.factor_count(); ++k) {
      const SimplicialComplex& f = carrier.factor(k);
      components.push_back(f.require_index(simplex_from_json(cell["cell"][k], f)));
    }
    s.add(carrier.index_of(components), rational_value(cell["value"]));
  }
  return s;
}

std::vector<Piece> parse_pieces(const json& doc, const SimplicialComplex& ambient) {
  if (!doc.is_object() || !doc.contains("pieces") || !doc["pieces"].is_array()) {
    throw Error(ErrorCode::kParseError, "expected an object with a \"pieces\" array");
  }
  std::vector<std::string> names(ambient.names().begin(), ambient.names().end());
  std::vector<Piece> pieces;
  for (const json& p : doc["pieces"]) {
    if (!p.contains("simplices") || !p["simplices"].is_array()) {
      throw Error(ErrorCode::kParseError, "each piece needs a \"simplices\" list");
    }
    std::vector<Simplex> generators;
    for (const json& s : p["simplices"]) generators.push_back(simplex_from_json(s, ambient));
    auto complex = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_maximal(generators, names));

    std::vector<Rational> values(ambient.vertex_bound(), Rational(0));
    const json alpha = p.value("alpha", json("1"));
    if (alpha.is_object()) {
      std::vector<char> seen(ambient.vertex_bound(), 0);
      for (const auto& [name, value] : alpha.items()) {
        const auto id = ambient.find_vertex(name);
        if (!id) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + name + "'");
        values[*id] = rational_value(value);
        seen[*id] = 1;
      }
      for (VertexId v : complex->vertices()) {
        if (!seen[v]) throw Error(ErrorCode::kUnknownVertex, "piece has no alpha at '" + names[v] + "'");
      }
    } else {
      const Rational c = rational_value(alpha);
      for (VertexId v : complex->vertices()) values[v] = c;
    }
    pieces.push_back({std::move(complex), PLFunction(std::move(values))});
  }
  return pieces;
}

}  // namespace curvcalc::cli
