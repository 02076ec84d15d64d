#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "curvcalc/complex.hpp"

namespace curvcalc::detail {

/// The open star of a vertex rewritten over local neighbor indices, so that
/// per-direction work is a handful of flag lookups.
struct LocalStar {
  VertexId apex = 0;
  std::vector<VertexId> neighbors;
  /// For each simplex of the star other than the apex itself: its complex
  /// index, its dimension, and its vertices minus the apex as local indices.
  struct Coface {
    std::size_t index;
    std::size_t dimension;
    std::vector<std::uint32_t> rest;
  };
  std::vector<Coface> cofaces;

  static LocalStar build(const SimplicialComplex& complex, VertexId v);

  bool covered(const Coface& c, std::span<const char> flags) const {
    for (std::uint32_t k : c.rest) {
      if (!flags[k]) return false;
    }
    return true;
  }

  /// 1 + sum over cofaces whose other vertices are all flagged of (-1)^dim.
  /// With flags marking the lower neighbors this is 1 - chi(lower link).
  int alternating_count(std::span<const char> flags) const {
    int total = 1;
    for (const Coface& c : cofaces) {
      if (covered(c, flags)) total += (c.dimension % 2 == 0) ? 1 : -1;
    }
    return total;
  }
};

inline LocalStar LocalStar::build(const SimplicialComplex& complex, VertexId v) {
  LocalStar star;
  star.apex = v;
  const SimplicialComplex link = complex.link(v);
  star.neighbors.assign(link.vertices().begin(), link.vertices().end());
  std::vector<std::uint32_t> local(complex.vertex_bound(), 0);
  for (std::uint32_t k = 0; k < star.neighbors.size(); ++k) local[star.neighbors[k]] = k;
  for (std::size_t i : complex.star(v)) {
    const Simplex& s = complex.simplex(i);
    if (s.size() == 1) continue;
    Coface c{i, s.dimension(), {}};
    for (VertexId w : s) {
      if (w != v) c.rest.push_back(local[w]);
    }
    star.cofaces.push_back(std::move(c));
  }
  return star;
}

}  // namespace curvcalc::detail
