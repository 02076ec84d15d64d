#include "curvcalc/curvature.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "curvcalc/error.hpp"
#include "local_star.hpp"

namespace curvcalc {

namespace {

constexpr double kPi = std::numbers::pi;

double angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double dot = a.dot(b);
  const double wedge = std::sqrt(std::max(0.0, a.squaredNorm() * b.squaredNorm() - dot * dot));
  return std::atan2(wedge, dot);
}

// Interior angle at `a` of the spherical polygon through b, a, c.
double corner_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
  const Eigen::Vector3d tb = b - a.dot(b) * a;
  const Eigen::Vector3d tc = c - a.dot(c) * a;
  return std::atan2(tb.cross(tc).norm(), tb.dot(tc));
}

// Girard: area = sum of interior angles - (m - 2) pi, for a convex spherical
// polygon with unit vertices listed in boundary order.
double spherical_polygon_area(std::span<const Eigen::Vector3d> ring) {
  const std::size_t m = ring.size();
  double angles = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    angles += corner_angle(ring[i], ring[(i + m - 1) % m], ring[(i + 1) % m]);
  }
  return angles - static_cast<double>(m - 2) * kPi;
}

std::uint64_t simplex_hash(const Simplex& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId v : s) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

bool NormalCone::contains(const Eigen::VectorXd& xi) const {
  for (const Eigen::VectorXd& g : generators) {
    if (xi.dot(g) < 0.0) return false;
  }
  return true;
}

NormalCone normal_cone(const Embedding& embedding, const Simplex& simplex, VertexId v) {
  if (!simplex.contains(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " is not a vertex of " + to_string(simplex));
  }
  NormalCone cone;
  cone.apex = v;
  const Eigen::VectorXd apex = embedding.point(v);
  for (VertexId w : simplex) {
    if (w != v) cone.generators.push_back(apex - embedding.point(w));
  }
  return cone;
}

double exact_cone_fraction(const NormalCone& cone, Eigen::Index ambient_dimension) {
  if (ambient_dimension > 3) {
    throw Error(ErrorCode::kExactUnavailable,
                "exact excess angles need ambient dimension <= 3, got " + std::to_string(ambient_dimension));
  }
  const auto& d = cone.generators;
  switch (d.size()) {
    case 0:
      return 1.0;
    case 1:
      // A half-space: on S^0 one of the two points, otherwise a hemisphere.
      return 0.5;
    case 2:
      // Wedge (R^2) or lune (R^3) of opening pi - angle(d1, d2).
      return (kPi - angle_between(d[0], d[1])) / (2.0 * kPi);
    case 3: {
      // The cone is simplicial; its extreme rays are the dual basis.
      std::array<Eigen::Vector3d, 3> ring;
      for (int i = 0; i < 3; ++i) {
        const Eigen::Vector3d a = d[(i + 1) % 3].head<3>();
        const Eigen::Vector3d b = d[(i + 2) % 3].head<3>();
        Eigen::Vector3d ray = a.cross(b);
        if (ray.dot(d[i].head<3>()) < 0.0) ray = -ray;
        ring[i] = ray.normalized();
      }
      return spherical_polygon_area(ring) / (4.0 * kPi);
    }
    default:
      throw Error(ErrorCode::kDegenerateSimplex, "normal cone has dependent generators");
  }
}

Estimate excess_angle(const Embedding& embedding, const Simplex& simplex, VertexId v, Method method,
                      const SamplingOptions& sampling) {
  const NormalCone cone = normal_cone(embedding, simplex, v);
  if (method == Method::kExact) return {exact_cone_fraction(cone, embedding.ambient_dimension()), 0.0};

  if (sampling.samples == 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  std::size_t hits = 0;
  DirectionSampler sampler(embedding.ambient_dimension(), sampling.seed,
                           stream_id(StreamTag::kExcessAngle, simplex_hash(simplex) ^ v));
  sampler.run(sampling.samples, [&](const Eigen::VectorXd& xi) {
    bool inside = true;
    for (const Eigen::VectorXd& g : cone.generators) {
      const double dot = xi.dot(g);
      if (dot == 0.0) return false;
      inside = inside && dot > 0.0;
    }
    hits += inside ? 1 : 0;
    return true;
  });
  return {static_cast<double>(hits) / static_cast<double>(sampling.samples),
          binomial_std_error(hits, sampling.samples)};
}

Estimate banchoff_curvature(const Embedding& embedding, VertexId v, Method method,
                            const SamplingOptions& sampling) {
  const SimplicialComplex& complex = embedding.complex();
  complex.require_vertex(v);
  const detail::LocalStar star = detail::LocalStar::build(complex, v);

  if (method == Method::kExact) {
    double kappa = 1.0;
    for (const auto& c : star.cofaces) {
      const double e = exact_cone_fraction(normal_cone(embedding, complex.simplex(c.index), v),
                                           embedding.ambient_dimension());
      kappa += (c.dimension % 2 == 0) ? e : -e;
    }
    return {kappa, 0.0};
  }

  if (sampling.samples == 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  const Eigen::Index n = static_cast<Eigen::Index>(star.neighbors.size());
  Eigen::MatrixXd diffs(n, embedding.ambient_dimension());
  const Eigen::RowVectorXd apex = embedding.coordinates().row(v);
  for (Eigen::Index k = 0; k < n; ++k) diffs.row(k) = apex - embedding.coordinates().row(star.neighbors[k]);

  std::vector<std::size_t> hits(star.cofaces.size(), 0);
  std::vector<char> flags(static_cast<std::size_t>(n), 0);
  Eigen::VectorXd dots(n);
  DirectionSampler sampler(embedding.ambient_dimension(), sampling.seed,
                           stream_id(StreamTag::kBanchoff, v));
  sampler.run(sampling.samples, [&](const Eigen::VectorXd& xi) {
    dots.noalias() = diffs * xi;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (dots[k] == 0.0) return false;
      flags[static_cast<std::size_t>(k)] = dots[k] > 0.0;
    }
    for (std::size_t c = 0; c < star.cofaces.size(); ++c) {
      if (star.covered(star.cofaces[c], flags)) ++hits[c];
    }
    return true;
  });

  Estimate out{1.0, 0.0};
  const double total = static_cast<double>(sampling.samples);
  for (std::size_t c = 0; c < star.cofaces.size(); ++c) {
    const double e = static_cast<double>(hits[c]) / total;
    out.value += (star.cofaces[c].dimension % 2 == 0) ? e : -e;
    out.std_error += binomial_std_error(hits[c], sampling.samples);
  }
  return out;
}

Estimate CurvatureMeasure::total() const {
  Estimate sum;
  for (const VertexAtom& a : atoms) {
    sum.value += a.kappa.value;
    sum.std_error += a.kappa.std_error;
  }
  return sum;
}

const Estimate& CurvatureMeasure::at(VertexId v) const {
  for (const VertexAtom& a : atoms) {
    if (a.vertex == v) return a.kappa;
  }
  throw Error(ErrorCode::kUnknownVertex, "no atom at vertex " + std::to_string(v));
}

CurvatureMeasure banchoff_measure(const Embedding& embedding, Method method,
                                  const SamplingOptions& sampling) {
  CurvatureMeasure measure;
  for (VertexId v : embedding.complex().vertices()) {
    measure.atoms.push_back({v, banchoff_curvature(embedding, v, method, sampling)});
  }
  return measure;
}

Estimate curvature_integral(const Embedding& embedding, const PLFunction& alpha, Method method,
                            const SamplingOptions& sampling) {
  alpha.require_defined_on(embedding.complex());
  Estimate out;
  for (VertexId v : embedding.complex().vertices()) {
    const double a = alpha(v).get_d();
    if (a == 0.0) continue;
    const Estimate kappa = banchoff_curvature(embedding, v, method, sampling);
    out.value += a * kappa.value;
    out.std_error += std::abs(a) * kappa.std_error;
  }
  return out;
}

Estimate final_integral(const Embedding& ambient, std::span<const Piece> pieces, Method method,
                        const SamplingOptions& sampling) {
  Estimate out;
  for (const Piece& piece : pieces) {
    const Embedding restricted = ambient.restricted_to(piece.complex);
    const Estimate part = curvature_integral(restricted, piece.alpha, method, sampling);
    out.value += part.value;
    out.std_error += part.std_error;
  }
  return out;
}

}  // namespace curvcalc
