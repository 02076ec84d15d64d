#pragma once

#include <cstdint>
#include <vector>

#include "curvcalc/euler.hpp"
#include "curvcalc/simplicial_map.hpp"
#include "curvcalc/subdivision.hpp"
#include "random.hpp"

namespace curvcalc::testing {

/// (n+1)! / (s_0! ... s_i! (n+1-sum s)!).
std::uint64_t multinomial(std::size_t n, const std::vector<std::size_t>& parts);

/// Integral of round(n alpha)/n on a 1-complex: every edge is cut at the
/// parameters where n alpha is an integer and each open piece is evaluated at
/// its midpoint.
Rational level_set_oracle(const SimplicialComplex& complex, const PLFunction& alpha, long n, bool ceil);

/// Random point of the open simplex tau, as positive rational barycentric
/// weights summing to 1 (one per vertex of tau, in order).
std::vector<Rational> random_open_point(Rng& rng, const Simplex& tau);

/// chi_c of f^{-1}(y) for y in the open simplex tau, computed by slicing every
/// open source simplex with the affine system f = y: the slice is nonempty
/// iff y lies in the relative interior of the image polytope, and then it is
/// an open convex polytope of dimension dim(sigma) - rank.
long fiber_chi_oracle(const SimplicialMap& f, const Simplex& tau, const std::vector<Rational>& y);

}  // namespace curvcalc::testing
