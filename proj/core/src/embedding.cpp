#include "curvcalc/embedding.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "curvcalc/error.hpp"

namespace curvcalc {

namespace {

bool affinely_independent(const Eigen::MatrixXd& coords, const Simplex& s) {
  if (s.size() == 1) return true;
  if (static_cast<Eigen::Index>(s.size() - 1) > coords.cols()) return false;
  Eigen::MatrixXd edges(coords.cols(), static_cast<Eigen::Index>(s.size() - 1));
  for (std::size_t k = 1; k < s.size(); ++k) {
    edges.col(static_cast<Eigen::Index>(k - 1)) = (coords.row(s[k]) - coords.row(s[0])).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
  const auto& sv = svd.singularValues();
  return sv.minCoeff() > 1e-10 * std::max(1.0, sv.maxCoeff());
}

}  // namespace

Embedding::Embedding(std::shared_ptr<const SimplicialComplex> complex, Eigen::MatrixXd coordinates)
    : complex_(std::move(complex)), coordinates_(std::move(coordinates)) {
  if (!complex_->empty() && coordinates_.rows() <= complex_->vertices().back()) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding has no coordinates for some vertex");
  }
  if (!coordinates_.allFinite()) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding coordinates must be finite");
  }
  for (const Simplex& s : complex_->maximal_simplices()) {
    if (!affinely_independent(coordinates_, s)) {
      throw Error(ErrorCode::kDegenerateSimplex,
                  "simplex " + to_string(s) + " is affinely degenerate in the embedding");
    }
  }
}

Embedding Embedding::restricted_to(std::shared_ptr<const SimplicialComplex> sub) const {
  if (!sub->is_subcomplex_of(*complex_)) {
    throw Error(ErrorCode::kPieceNotSubcomplex, "piece is not a subcomplex of the embedded complex");
  }
  return Embedding(std::move(sub), coordinates_);
}

Embedding Embedding::transformed(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& shift) const {
  Eigen::MatrixXd moved = (coordinates_ * rotation.transpose()).rowwise() + shift.transpose();
  return Embedding(complex_, std::move(moved));
}

Embedding Embedding::scaled(double factor) const { return Embedding(complex_, coordinates_ * factor); }

Embedding equilateral_embedding(std::shared_ptr<const SimplicialComplex> complex) {
  const Eigen::Index n = complex->vertex_bound();
  Eigen::MatrixXd coords = Eigen::MatrixXd::Identity(n, n) * (std::sqrt(2.0) / 2.0);
  return Embedding(std::move(complex), std::move(coords));
}

}  // namespace curvcalc
