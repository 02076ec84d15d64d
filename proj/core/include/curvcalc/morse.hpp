#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "curvcalc/curvature.hpp"
#include "curvcalc/embedding.hpp"
#include "curvcalc/sampling.hpp"

namespace curvcalc {

/// Unit vector x defining the height function h_x(y) = -<x, y>.
class Direction {
 public:
  /// Throws Error(kInvalidArgument) for a zero or non-finite vector.
  static Direction normalized(const Eigen::VectorXd& x);

  const Eigen::VectorXd& vector() const { return x_; }
  Eigen::Index dimension() const { return x_.size(); }
  double height(const Eigen::VectorXd& y) const { return -x_.dot(y); }

 private:
  explicit Direction(Eigen::VectorXd x) : x_(std::move(x)) {}
  Eigen::VectorXd x_;
};

/// 1 - chi(lower link of v) for h_x. Throws Error(kNonGenericDirection) when
/// some link vertex has the same height as v and Error(kDimensionMismatch)
/// when x does not live in the ambient space.
int morse_index(const Embedding& embedding, VertexId v, const Direction& x);

struct MorseIndexReport {
  Direction direction;
  /// One entry per vertex; empty where the direction is not generic.
  std::vector<std::pair<VertexId, std::optional<int>>> indices;
  bool generic = true;
};

/// Indices at every vertex, never throwing on ties.
MorseIndexReport morse_indices(const Embedding& embedding, const Direction& x);

/// Sum of the Morse indices over all vertices. Throws
/// Error(kNonGenericDirection) on any tie.
long chi_sum_check(const Embedding& embedding, const Direction& x);

struct MorseCurvature {
  CurvatureMeasure measure;
  std::size_t samples = 0;
  /// Directions discarded because some vertex had a tie.
  std::size_t redraws = 0;
};

/// Per-vertex mean Morse index over uniformly random directions. All vertices
/// share each direction; a direction with a tie anywhere is redrawn. Errors
/// are standard errors of the mean.
MorseCurvature bk_curvature_measure(const Embedding& embedding, const SamplingOptions& sampling = {});

}  // namespace curvcalc
