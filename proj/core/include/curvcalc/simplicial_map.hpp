#pragma once

#include <memory>
#include <vector>

#include "curvcalc/complex.hpp"

namespace curvcalc {

/// Vertex map between two complexes that carries every source simplex onto a
/// target simplex (after removing repeated image vertices).
class SimplicialMap {
 public:
  /// Throws Error(kInvalidMap) when a vertex is unmapped, maps outside the
  /// target, or some simplex image is missing from the target.
  SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                std::shared_ptr<const SimplicialComplex> target,
                std::vector<VertexId> vertex_map);

  static SimplicialMap identity(std::shared_ptr<const SimplicialComplex> complex);
  /// Collapses everything onto the single vertex of `point`.
  static SimplicialMap to_point(std::shared_ptr<const SimplicialComplex> source,
                                std::shared_ptr<const SimplicialComplex> point);

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const std::shared_ptr<const SimplicialComplex>& source_ptr() const { return source_; }
  const std::shared_ptr<const SimplicialComplex>& target_ptr() const { return target_; }

  VertexId operator()(VertexId v) const { return vertex_map_[v]; }
  std::span<const VertexId> vertex_map() const { return vertex_map_; }

  Simplex image(const Simplex& s) const;
  /// Target cell index of the image of source cell `source_index`.
  std::size_t image_index(std::size_t source_index) const { return image_index_[source_index]; }

 private:
  std::shared_ptr<const SimplicialComplex> source_;
  std::shared_ptr<const SimplicialComplex> target_;
  std::vector<VertexId> vertex_map_;
  std::vector<std::size_t> image_index_;
};

/// outer ∘ inner. Throws Error(kNotComposable) unless inner's target equals
/// outer's source.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

}  // namespace curvcalc
