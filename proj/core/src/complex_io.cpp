#include "curvcalc/complex_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "curvcalc/error.hpp"

namespace curvcalc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& tok, std::size_t line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "bad coordinate '" + tok + "'");
  return value;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

ComplexDocument parse_complex(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"curvcalc-complex", "v1"}) {
    fail(lines.empty() ? 1 : lines[0].number, "expected header 'curvcalc-complex v1'");
  }
  std::size_t i = 1;
  if (i >= lines.size() || lines[i].tokens[0] != "vertices") {
    fail(i < lines.size() ? lines[i].number : lines.back().number, "expected 'vertices' section");
  }

  std::optional<std::size_t> coord_dim;
  bool has_alpha = false;
  for (std::size_t k = 1; k < lines[i].tokens.size(); ++k) {
    const std::string& attr = lines[i].tokens[k];
    if (attr == "alpha") {
      has_alpha = true;
    } else if (attr.rfind("coords=", 0) == 0) {
      std::size_t n = 0;
      const char* first = attr.data() + 7;
      auto [ptr, ec] = std::from_chars(first, attr.data() + attr.size(), n);
      if (ec != std::errc() || ptr != attr.data() + attr.size() || n == 0) {
        fail(lines[i].number, "bad attribute '" + attr + "'");
      }
      coord_dim = n;
    } else {
      fail(lines[i].number, "unknown vertices attribute '" + attr + "'");
    }
  }
  ++i;

  std::vector<std::string> names;
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<std::vector<double>> coords;
  std::vector<Rational> alpha;
  const std::size_t expected = 1 + coord_dim.value_or(0) + (has_alpha ? 1 : 0);
  for (; i < lines.size() && lines[i].tokens[0] != "simplices"; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != expected) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "line " + std::to_string(line.number) + ": vertex '" + line.tokens[0] +
                      "' has " + std::to_string(line.tokens.size() - 1) + " fields, expected " +
                      std::to_string(expected - 1));
    }
    const std::string& name = line.tokens[0];
    if (!ids.emplace(name, static_cast<VertexId>(names.size())).second) {
      fail(line.number, "duplicate vertex '" + name + "'");
    }
    names.push_back(name);
    std::vector<double> point;
    for (std::size_t k = 0; k < coord_dim.value_or(0); ++k) {
      point.push_back(parse_double(line.tokens[1 + k], line.number));
    }
    coords.push_back(std::move(point));
    if (has_alpha) {
      try {
        alpha.push_back(parse_rational(line.tokens.back()));
      } catch (const Error& e) {
        fail(line.number, e.what());
      }
    }
  }
  if (i >= lines.size()) fail(lines.back().number, "expected 'simplices' section");
  if (lines[i].tokens.size() != 1) fail(lines[i].number, "unexpected text after 'simplices'");
  ++i;

  std::vector<Simplex> generators;
  for (VertexId v = 0; v < names.size(); ++v) generators.push_back(Simplex{v});
  for (; i < lines.size(); ++i) {
    std::vector<VertexId> verts;
    for (const std::string& tok : lines[i].tokens) {
      auto it = ids.find(tok);
      if (it == ids.end()) fail(lines[i].number, "unknown vertex '" + tok + "'");
      verts.push_back(it->second);
    }
    try {
      generators.emplace_back(std::move(verts));
    } catch (const Error& e) {
      fail(lines[i].number, e.what());
    }
  }

  ComplexDocument doc;
  doc.complex = SimplicialComplex::from_maximal(std::move(generators), std::move(names));
  if (coord_dim) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(coords.size()), static_cast<Eigen::Index>(*coord_dim));
    for (std::size_t r = 0; r < coords.size(); ++r) {
      for (std::size_t c = 0; c < *coord_dim; ++c) m(r, c) = coords[r][c];
    }
    doc.coordinates = std::move(m);
  }
  if (has_alpha) doc.alpha = PLFunction(std::move(alpha));
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ComplexDocument read_complex_file(const std::filesystem::path& path) {
  try {
    return parse_complex(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string serialize_complex(const ComplexDocument& doc) {
  const SimplicialComplex& x = doc.complex;
  std::string out = "curvcalc-complex v1\nvertices";
  if (doc.coordinates) out += " coords=" + std::to_string(doc.coordinates->cols());
  if (doc.alpha) out += " alpha";
  out += "\n";
  for (VertexId v : x.vertices()) {
    out += x.vertex_name(v);
    if (doc.coordinates) {
      for (Eigen::Index c = 0; c < doc.coordinates->cols(); ++c) {
        out += " " + format_double((*doc.coordinates)(v, c));
      }
    }
    if (doc.alpha) out += " " + to_string((*doc.alpha)(v));
    out += "\n";
  }
  out += "simplices\n";
  for (const Simplex& s : x.maximal_simplices()) {
    if (s.size() == 1) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += " ";
      out += x.vertex_name(s[k]);
    }
    out += "\n";
  }
  return out;
}

SimplicialMap parse_map(std::string_view text, std::shared_ptr<const SimplicialComplex> source,
                        std::shared_ptr<const SimplicialComplex> target) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"map", "v1"}) {
    fail(lines.empty() ? 1 : lines[0].number, "expected header 'map v1'");
  }
  constexpr VertexId kUnmapped = ~VertexId{0};
  std::vector<VertexId> ids(source->vertex_bound(), kUnmapped);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[1] != "->") {
      fail(line.number, "expected 'source -> target'");
    }
    auto from = source->find_vertex(line.tokens[0]);
    if (!from) fail(line.number, "unknown source vertex '" + line.tokens[0] + "'");
    auto to = target->find_vertex(line.tokens[2]);
    if (!to) fail(line.number, "unknown target vertex '" + line.tokens[2] + "'");
    if (ids[*from] != kUnmapped) fail(line.number, "vertex '" + line.tokens[0] + "' mapped twice");
    ids[*from] = *to;
  }
  for (VertexId v : source->vertices()) {
    if (ids[v] == kUnmapped) {
      throw Error(ErrorCode::kInvalidMap, "vertex '" + source->vertex_name(v) + "' is not mapped");
    }
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(ids));
}

}  // namespace curvcalc
