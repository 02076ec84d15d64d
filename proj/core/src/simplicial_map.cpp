#include "curvcalc/simplicial_map.hpp"

#include <algorithm>

#include "curvcalc/error.hpp"

namespace curvcalc {

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target,
                             std::vector<VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map)) {
  for (VertexId v : source_->vertices()) {
    if (v >= vertex_map_.size()) {
      throw Error(ErrorCode::kInvalidMap, "vertex '" + source_->vertex_name(v) + "' is not mapped");
    }
    if (!target_->has_vertex(vertex_map_[v])) {
      throw Error(ErrorCode::kInvalidMap, "vertex '" + source_->vertex_name(v) +
                                              "' maps outside the target complex");
    }
  }
  image_index_.reserve(source_->size());
  for (const Simplex& s : source_->simplices()) {
    Simplex img = image(s);
    auto index = target_->index_of(img);
    if (!index) {
      throw Error(ErrorCode::kInvalidMap, "image " + to_string(img) + " of " + to_string(s) +
                                              " is not a simplex of the target");
    }
    image_index_.push_back(*index);
  }
}

SimplicialMap SimplicialMap::identity(std::shared_ptr<const SimplicialComplex> complex) {
  std::vector<VertexId> ids(complex->vertex_bound());
  for (VertexId v = 0; v < ids.size(); ++v) ids[v] = v;
  return SimplicialMap(complex, complex, std::move(ids));
}

SimplicialMap SimplicialMap::to_point(std::shared_ptr<const SimplicialComplex> source,
                                      std::shared_ptr<const SimplicialComplex> point) {
  if (point->size() != 1) throw Error(ErrorCode::kInvalidMap, "target is not a point");
  std::vector<VertexId> ids(source->vertex_bound(), point->vertices()[0]);
  return SimplicialMap(std::move(source), std::move(point), std::move(ids));
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<VertexId> img;
  img.reserve(s.size());
  for (VertexId v : s) img.push_back(vertex_map_[v]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Simplex(std::move(img));
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (inner.target_ptr() != outer.source_ptr() && !(inner.target() == outer.source())) {
    throw Error(ErrorCode::kNotComposable, "inner map's target differs from outer map's source");
  }
  std::vector<VertexId> ids(inner.source().vertex_bound(), 0);
  for (VertexId v : inner.source().vertices()) ids[v] = outer(inner(v));
  return SimplicialMap(inner.source_ptr(), outer.target_ptr(), std::move(ids));
}

}  // namespace curvcalc
