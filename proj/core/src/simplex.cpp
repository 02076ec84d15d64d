#include "curvcalc/simplex.hpp"

#include <algorithm>

#include "curvcalc/error.hpp"

namespace curvcalc {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::kInvalidSimplex, "empty simplex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::kInvalidSimplex, "repeated vertex in simplex " + to_string(*this));
  }
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<VertexId> rest;
  rest.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != i) rest.push_back(vertices_[k]);
  }
  return Simplex(Unchecked{}, std::move(rest));
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = vertices_.size();
  if (n >= 32) throw Error(ErrorCode::kInvalidSimplex, "simplex too large to enumerate faces");
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<VertexId> face;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::uint32_t{1} << k)) face.push_back(vertices_[k]);
    }
    out.push_back(Simplex(Unchecked{}, std::move(face)));
  }
  return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace curvcalc
