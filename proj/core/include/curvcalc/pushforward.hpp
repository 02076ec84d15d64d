#pragma once

#include <span>
#include <vector>

#include "curvcalc/embedding.hpp"
#include "curvcalc/euler.hpp"
#include "curvcalc/product.hpp"
#include "curvcalc/sampling.hpp"
#include "curvcalc/simplicial_map.hpp"

namespace curvcalc {

/// Fiberwise Euler integral along f. Each open source simplex sigma sends
/// (-1)^(dim sigma - dim f(sigma)) times its coefficient to the open image
/// simplex. The result lives on the whole target complex. Throws
/// Error(kCarrierMismatch) when `s` does not live on f's source.
ConstructibleFunction pushforward(const SimplicialMap& f, const ConstructibleFunction& s);

/// chi_c of the fiber of f over any point of the open simplex `tau`, i.e.
/// pushforward(f, 1) at tau. Throws Error(kUnknownSimplex).
long fiber_euler(const SimplicialMap& f, const Simplex& tau);

/// (f o g)_* s == f_* g_* s. Throws Error(kNotComposable).
bool check_functoriality(const SimplicialMap& f, const SimplicialMap& g, const ConstructibleFunction& s);

/// Three evaluations of the Euler integral of a function on a product:
/// directly over product cells, over the first factor first, and over the
/// remaining factors first.
struct FubiniTriple {
  EulerValue direct;
  EulerValue iterated_first;
  EulerValue iterated_rest;

  bool agree() const { return direct == iterated_first && direct == iterated_rest; }
};

/// Throws Error(kCarrierMismatch).
FubiniTriple fubini_chi(const ProductCellComplex& carrier, const ConstructibleFunction& s);

/// Monte Carlo Banchoff curvature of the product cell complex at a product
/// vertex, with factors embedded coordinatewise in the sum of their ambient
/// spaces. `vertex` holds one vertex id per factor.
Estimate product_curvature(std::span<const Embedding> factors, std::span<const VertexId> vertex,
                           const SamplingOptions& sampling = {});

struct ProductCurvatureRow {
  std::vector<VertexId> vertex;
  Estimate product;
  /// Product of the factor curvatures and its propagated error.
  Estimate factors;
  /// sqrt(err_product^2 + err_factors^2).
  double joint_error = 0.0;
};

/// One row per product vertex, in row-major order. Factor curvatures are
/// exact when every factor lives in dimension <= 3, Monte Carlo otherwise.
std::vector<ProductCurvatureRow> fubini_curvature(std::span<const Embedding> factors,
                                                  const SamplingOptions& sampling = {});

}  // namespace curvcalc
