#pragma once

#include <Eigen/Core>

#include <memory>
#include <span>
#include <vector>

#include "curvcalc/embedding.hpp"
#include "curvcalc/sampling.hpp"

namespace curvcalc {

/// Directions xi maximized over a simplex at one of its vertices:
/// { xi : <xi, apex - w> >= 0 for every other vertex w }.
struct NormalCone {
  VertexId apex = 0;
  std::vector<Eigen::VectorXd> generators;

  bool contains(const Eigen::VectorXd& xi) const;
};

/// Throws Error(kInvalidArgument) when `v` is not a vertex of `simplex`.
NormalCone normal_cone(const Embedding& embedding, const Simplex& simplex, VertexId v);

/// Fraction of the unit sphere occupied by a polyhedral cone with linearly
/// independent generator constraints, in ambient dimension <= 3. Throws
/// Error(kExactUnavailable) above that.
double exact_cone_fraction(const NormalCone& cone, Eigen::Index ambient_dimension);

/// Excess angle: normalized sphere measure of the normal cone. The exact path
/// needs ambient dimension <= 3; Monte Carlo works in any dimension and
/// reports a binomial standard error.
Estimate excess_angle(const Embedding& embedding, const Simplex& simplex, VertexId v,
                      Method method, const SamplingOptions& sampling = {});

/// Alternating sum of excess angles over the simplices containing `v`. The
/// Monte Carlo path shares one direction sample across those simplices and
/// reports the sum of their per-term standard errors.
Estimate banchoff_curvature(const Embedding& embedding, VertexId v, Method method,
                            const SamplingOptions& sampling = {});

struct VertexAtom {
  VertexId vertex = 0;
  Estimate kappa;
};

/// Atomic measure sum_v kappa(v) delta_v.
struct CurvatureMeasure {
  std::vector<VertexAtom> atoms;

  /// Total mass; the error is the sum of the atoms' errors.
  Estimate total() const;
  /// Throws Error(kUnknownVertex).
  const Estimate& at(VertexId v) const;
};

CurvatureMeasure banchoff_measure(const Embedding& embedding, Method method,
                                  const SamplingOptions& sampling = {});

/// sum_v alpha(v) kappa(v), with error sum_v |alpha(v)| err(v).
Estimate curvature_integral(const Embedding& embedding, const PLFunction& alpha, Method method,
                            const SamplingOptions& sampling = {});

/// One compact piece of a piecewise integrand: a subcomplex of the ambient
/// complex and a PL function on it.
struct Piece {
  std::shared_ptr<const SimplicialComplex> complex;
  PLFunction alpha;
};

/// Sum over pieces of the curvature integral of alpha_i against the piece's
/// own curvature measure. Throws Error(kPieceNotSubcomplex).
Estimate final_integral(const Embedding& ambient, std::span<const Piece> pieces, Method method,
                        const SamplingOptions& sampling = {});

}  // namespace curvcalc
