#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvcalc/rational.hpp"
#include "curvcalc/simplex.hpp"

namespace curvcalc {

/// Throws Error(kMissingFace) naming the first simplex whose codimension-one
/// face is absent. Checking codimension one suffices: closure then follows by
/// induction on dimension.
void validate(std::span<const Simplex> simplices);

/// A finite abstract simplicial complex stored as its full, face-closed set of
/// simplices, ordered by dimension and then lexicographically. The index of a
/// simplex in that order is its cell index everywhere else in the library.
///
/// Vertex ids need not be dense (subcomplexes keep the ids of the complex they
/// came from); `vertex_bound()` is one past the largest id. Names are a side
/// table for reporting and file round-trips.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of `generators`.
  static SimplicialComplex from_maximal(std::vector<Simplex> generators,
                                        std::vector<std::string> names = {});

  /// Validates closure instead of computing it.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices,
                                          std::vector<std::string> names = {});

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  const Simplex& simplex(std::size_t index) const { return simplices_[index]; }
  std::span<const Simplex> simplices() const { return simplices_; }
  std::size_t dimension_of(std::size_t index) const { return simplices_[index].dimension(); }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Throws Error(kUnknownSimplex).
  std::size_t require_index(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// -1 for the empty complex.
  int dimension() const;
  std::span<const VertexId> vertices() const { return vertices_; }
  bool has_vertex(VertexId v) const;
  /// Throws Error(kUnknownVertex).
  void require_vertex(VertexId v) const;
  VertexId vertex_bound() const { return static_cast<VertexId>(names_.size()); }

  std::vector<std::size_t> f_vector() const;
  /// Ordinary Euler characteristic; equals chi_c for a finite complex.
  long euler_characteristic() const;
  std::vector<Simplex> maximal_simplices() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  const std::string& vertex_name(VertexId v) const { return names_[v]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  /// Indices of the simplices containing `v` (the open star).
  std::vector<std::size_t> star(VertexId v) const;
  SimplicialComplex closed_star(VertexId v) const;
  /// { s : v not in s, s + v in X }.
  SimplicialComplex link(VertexId v) const;
  /// Full subcomplex spanned by `keep`: every simplex whose vertices all lie
  /// in `keep`.
  SimplicialComplex induced_subcomplex(std::span<const VertexId> keep) const;

  /// Compares simplices only; names are presentation.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  SimplicialComplex(std::vector<Simplex> sorted_closed, std::vector<std::string> names);
  SimplicialComplex sub(std::vector<Simplex> sorted_closed) const;

  std::vector<Simplex> simplices_;
  std::vector<VertexId> vertices_;
  std::vector<std::string> names_;

  friend SimplicialComplex from_closed_sorted(std::vector<Simplex>, std::vector<std::string>);
};

/// Builds from simplices already known to be sorted and face-closed (used by
/// constructors that produce closure by construction, such as subdivision).
SimplicialComplex from_closed_sorted(std::vector<Simplex> simplices,
                                     std::vector<std::string> names = {});

/// Vertex-valued function extended affinely over each simplex. Values are
/// indexed by VertexId; entries for ids the complex does not use are ignored.
class PLFunction {
 public:
  PLFunction() = default;
  explicit PLFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  static PLFunction constant(const SimplicialComplex& complex, const Rational& c);

  const Rational& operator()(VertexId v) const { return values_[v]; }
  std::span<const Rational> values() const { return values_; }
  std::size_t vertex_bound() const { return values_.size(); }

  /// Linear extension evaluated at the barycenter: the vertex mean.
  Rational at_barycenter(const Simplex& s) const;
  Rational min_on(const Simplex& s) const;
  Rational max_on(const Simplex& s) const;

  /// Throws Error(kUnknownVertex) when some vertex of `complex` has no value.
  void require_defined_on(const SimplicialComplex& complex) const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  std::vector<Rational> values_;
};

}  // namespace curvcalc
