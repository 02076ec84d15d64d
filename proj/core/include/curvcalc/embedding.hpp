#pragma once

#include <Eigen/Core>

#include <memory>

#include "curvcalc/complex.hpp"

namespace curvcalc {

/// Vertex coordinates in R^N for a complex. Row v of `coordinates` is the
/// position of vertex v.
class Embedding {
 public:
  /// Throws Error(kDimensionMismatch) when a vertex has no row and
  /// Error(kDegenerateSimplex) when some simplex is affinely dependent.
  Embedding(std::shared_ptr<const SimplicialComplex> complex, Eigen::MatrixXd coordinates);

  const SimplicialComplex& complex() const { return *complex_; }
  const std::shared_ptr<const SimplicialComplex>& complex_ptr() const { return complex_; }
  Eigen::Index ambient_dimension() const { return coordinates_.cols(); }
  const Eigen::MatrixXd& coordinates() const { return coordinates_; }
  Eigen::VectorXd point(VertexId v) const { return coordinates_.row(v).transpose(); }

  /// Same coordinates on a subcomplex. Throws Error(kPieceNotSubcomplex).
  Embedding restricted_to(std::shared_ptr<const SimplicialComplex> sub) const;
  /// x -> rotation * x + shift.
  Embedding transformed(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& shift) const;
  Embedding scaled(double factor) const;

 private:
  std::shared_ptr<const SimplicialComplex> complex_;
  Eigen::MatrixXd coordinates_;
};

/// Vertex v -> (sqrt(2)/2) e_v in R^{vertex_bound}: every edge has length 1
/// and every simplex is regular.
Embedding equilateral_embedding(std::shared_ptr<const SimplicialComplex> complex);

}  // namespace curvcalc
