#include "curvcalc/complex.hpp"

#include <algorithm>

#include "curvcalc/error.hpp"

namespace curvcalc {

namespace {

void sort_unique(std::vector<Simplex>& simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
}

std::vector<std::string> complete_names(std::vector<std::string> names, VertexId bound) {
  for (VertexId v = static_cast<VertexId>(names.size()); v < bound; ++v) {
    names.push_back(std::to_string(v));
  }
  return names;
}

}  // namespace

void validate(std::span<const Simplex> simplices) {
  std::vector<Simplex> sorted(simplices.begin(), simplices.end());
  sort_unique(sorted);
  for (const Simplex& s : sorted) {
    if (s.size() == 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s.without(i);
      if (!std::binary_search(sorted.begin(), sorted.end(), face)) {
        throw Error(ErrorCode::kMissingFace,
                    "simplex " + to_string(s) + " is missing its face " + to_string(face));
      }
    }
  }
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> sorted_closed,
                                     std::vector<std::string> names)
    : simplices_(std::move(sorted_closed)) {
  VertexId bound = 0;
  for (const Simplex& s : simplices_) {
    if (s.size() != 1) break;
    vertices_.push_back(s[0]);
    bound = s[0] + 1;
  }
  if (names.size() > bound) bound = static_cast<VertexId>(names.size());
  names_ = complete_names(std::move(names), bound);
}

SimplicialComplex from_closed_sorted(std::vector<Simplex> simplices,
                                     std::vector<std::string> names) {
  return SimplicialComplex(std::move(simplices), std::move(names));
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> generators,
                                                  std::vector<std::string> names) {
  std::vector<Simplex> all;
  for (const Simplex& g : generators) {
    auto faces = g.faces();
    all.insert(all.end(), std::make_move_iterator(faces.begin()),
               std::make_move_iterator(faces.end()));
  }
  sort_unique(all);
  return SimplicialComplex(std::move(all), std::move(names));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices,
                                                    std::vector<std::string> names) {
  validate(simplices);
  sort_unique(simplices);
  return SimplicialComplex(std::move(simplices), std::move(names));
}

SimplicialComplex SimplicialComplex::sub(std::vector<Simplex> sorted_closed) const {
  SimplicialComplex out(std::move(sorted_closed), {});
  out.names_ = names_;
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
  if (it == simplices_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - simplices_.begin());
}

std::size_t SimplicialComplex::require_index(const Simplex& s) const {
  auto index = index_of(s);
  if (!index) throw Error(ErrorCode::kUnknownSimplex, "simplex " + to_string(s) + " is not in the complex");
  return *index;
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().dimension());
}

bool SimplicialComplex::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

void SimplicialComplex::require_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw Error(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v) + " is not in the complex");
  }
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const Simplex& s : simplices_) ++f[s.dimension()];
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (const Simplex& s : simplices_) chi += alternating_sign(s.dimension());
  return chi;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  // A simplex is maximal iff no codimension-one coface exists; scanning the
  // next dimension up is enough.
  std::vector<bool> covered(simplices_.size(), false);
  for (const Simplex& s : simplices_) {
    if (s.size() == 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) covered[*index_of(s.without(i))] = true;
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (!covered[i]) out.push_back(simplices_[i]);
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(simplices_.begin(), simplices_.end(),
                     [&](const Simplex& s) { return other.contains(s); });
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view name) const {
  for (VertexId v : vertices_) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

std::vector<std::size_t> SimplicialComplex::star(VertexId v) const {
  require_vertex(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (simplices_[i].contains(v)) out.push_back(i);
  }
  return out;
}

SimplicialComplex SimplicialComplex::closed_star(VertexId v) const {
  std::vector<Simplex> generators;
  for (std::size_t i : star(v)) generators.push_back(simplices_[i]);
  std::vector<Simplex> all;
  for (const Simplex& g : generators) {
    auto faces = g.faces();
    all.insert(all.end(), faces.begin(), faces.end());
  }
  sort_unique(all);
  return sub(std::move(all));
}

SimplicialComplex SimplicialComplex::link(VertexId v) const {
  std::vector<Simplex> out;
  for (std::size_t i : star(v)) {
    const Simplex& s = simplices_[i];
    if (s.size() == 1) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == v) {
        out.push_back(s.without(k));
        break;
      }
    }
  }
  sort_unique(out);
  return sub(std::move(out));
}

SimplicialComplex SimplicialComplex::induced_subcomplex(std::span<const VertexId> keep) const {
  std::vector<VertexId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Simplex> out;
  for (const Simplex& s : simplices_) {
    if (std::includes(sorted.begin(), sorted.end(), s.begin(), s.end())) out.push_back(s);
  }
  return sub(std::move(out));
}

PLFunction PLFunction::constant(const SimplicialComplex& complex, const Rational& c) {
  return PLFunction(std::vector<Rational>(complex.vertex_bound(), c));
}

Rational PLFunction::at_barycenter(const Simplex& s) const {
  Rational sum = 0;
  for (VertexId v : s) sum += values_[v];
  return sum / static_cast<long>(s.size());
}

Rational PLFunction::min_on(const Simplex& s) const {
  Rational best = values_[s[0]];
  for (VertexId v : s) {
    if (values_[v] < best) best = values_[v];
  }
  return best;
}

Rational PLFunction::max_on(const Simplex& s) const {
  Rational best = values_[s[0]];
  for (VertexId v : s) {
    if (values_[v] > best) best = values_[v];
  }
  return best;
}

void PLFunction::require_defined_on(const SimplicialComplex& complex) const {
  if (!complex.empty() && values_.size() <= complex.vertices().back()) {
    throw Error(ErrorCode::kUnknownVertex, "function has no value at vertex " +
                                               std::to_string(complex.vertices().back()));
  }
}

}  // namespace curvcalc
