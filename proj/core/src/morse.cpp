#include "curvcalc/morse.hpp"

#include <cmath>
#include <string>

#include "curvcalc/error.hpp"
#include "local_star.hpp"

namespace curvcalc {

namespace {

void check_dimension(const Embedding& embedding, const Direction& x) {
  if (x.dimension() != embedding.ambient_dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "direction has " + std::to_string(x.dimension()) + " coordinates, embedding has " +
                    std::to_string(embedding.ambient_dimension()));
  }
}

// Flags link vertices strictly below v; false on a tie.
bool lower_flags(const detail::LocalStar& star, const Eigen::VectorXd& heights, std::vector<char>& flags) {
  flags.assign(star.neighbors.size(), 0);
  const double hv = heights[star.apex];
  for (std::size_t k = 0; k < star.neighbors.size(); ++k) {
    const double hw = heights[star.neighbors[k]];
    if (hw == hv) return false;
    flags[k] = hw < hv;
  }
  return true;
}

}  // namespace

Direction Direction::normalized(const Eigen::VectorXd& x) {
  const double norm = x.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "direction must be a finite nonzero vector");
  }
  return Direction(x / norm);
}

int morse_index(const Embedding& embedding, VertexId v, const Direction& x) {
  check_dimension(embedding, x);
  embedding.complex().require_vertex(v);
  const detail::LocalStar star = detail::LocalStar::build(embedding.complex(), v);
  const Eigen::VectorXd heights = -(embedding.coordinates() * x.vector());
  std::vector<char> flags;
  if (!lower_flags(star, heights, flags)) {
    throw Error(ErrorCode::kNonGenericDirection,
                "direction is not generic at vertex " + embedding.complex().vertex_name(v));
  }
  return star.alternating_count(flags);
}

MorseIndexReport morse_indices(const Embedding& embedding, const Direction& x) {
  check_dimension(embedding, x);
  MorseIndexReport report{x, {}, true};
  const Eigen::VectorXd heights = -(embedding.coordinates() * x.vector());
  std::vector<char> flags;
  for (VertexId v : embedding.complex().vertices()) {
    const detail::LocalStar star = detail::LocalStar::build(embedding.complex(), v);
    if (lower_flags(star, heights, flags)) {
      report.indices.emplace_back(v, star.alternating_count(flags));
    } else {
      report.indices.emplace_back(v, std::nullopt);
      report.generic = false;
    }
  }
  return report;
}

long chi_sum_check(const Embedding& embedding, const Direction& x) {
  long sum = 0;
  for (VertexId v : embedding.complex().vertices()) sum += morse_index(embedding, v, x);
  return sum;
}

MorseCurvature bk_curvature_measure(const Embedding& embedding, const SamplingOptions& sampling) {
  if (sampling.samples == 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  const SimplicialComplex& complex = embedding.complex();
  std::vector<detail::LocalStar> stars;
  for (VertexId v : complex.vertices()) stars.push_back(detail::LocalStar::build(complex, v));

  const std::size_t m = stars.size();
  std::vector<double> sum(m, 0.0), sum_sq(m, 0.0);
  std::vector<int> current(m, 0);
  std::vector<char> flags;
  Eigen::VectorXd heights(embedding.coordinates().rows());

  DirectionSampler sampler(embedding.ambient_dimension(), sampling.seed, stream_id(StreamTag::kMorse, 0));
  MorseCurvature out;
  out.samples = sampling.samples;
  out.redraws = sampler.run(sampling.samples, [&](const Eigen::VectorXd& xi) {
    heights.noalias() = -(embedding.coordinates() * xi);
    for (std::size_t i = 0; i < m; ++i) {
      if (!lower_flags(stars[i], heights, flags)) return false;
      current[i] = stars[i].alternating_count(flags);
    }
    for (std::size_t i = 0; i < m; ++i) {
      sum[i] += current[i];
      sum_sq[i] += static_cast<double>(current[i]) * current[i];
    }
    return true;
  });

  const double n = static_cast<double>(sampling.samples);
  for (std::size_t i = 0; i < m; ++i) {
    const double mean = sum[i] / n;
    double error = 0.0;
    if (sampling.samples > 1) {
      const double variance = std::max(0.0, (sum_sq[i] - n * mean * mean) / (n - 1.0));
      error = std::sqrt(variance / n);
    }
    out.measure.atoms.push_back({stars[i].apex, {mean, error}});
  }
  return out;
}

}  // namespace curvcalc
