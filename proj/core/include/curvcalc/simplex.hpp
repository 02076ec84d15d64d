#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace curvcalc {

/// Dense, complex-local vertex identifier.
using VertexId = std::uint32_t;

/// A nonempty, strictly increasing list of vertices.
class Simplex {
 public:
  Simplex(std::initializer_list<VertexId> vertices);
  /// Sorts the input. Throws Error(kInvalidSimplex) when empty or when a
  /// vertex repeats.
  explicit Simplex(std::vector<VertexId> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::size_t dimension() const { return vertices_.size() - 1; }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;

  /// The codimension-one face obtained by dropping position `i`.
  Simplex without(std::size_t i) const;

  /// All nonempty faces, including the simplex itself. Faces are selected
  /// by bitmask, so the simplex must have fewer than 32 vertices.
  std::vector<Simplex> faces() const;

  /// Orders by dimension first, then lexicographically.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
  friend bool operator==(const Simplex& a, const Simplex& b) = default;

 private:
  struct Unchecked {};
  Simplex(Unchecked, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

  std::vector<VertexId> vertices_;
};

std::string to_string(const Simplex& s);

}  // namespace curvcalc
