#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "curvcalc/complex.hpp"

namespace curvcalc {

/// First barycentric subdivision together with the linearly extended function.
/// Vertex `i` of the result is the barycenter of simplex `i` of the input
/// (in the input's cell order); `carrier[i]` repeats that correspondence.
struct Subdivision {
  SimplicialComplex complex;
  PLFunction alpha;
  std::vector<std::size_t> carrier;
};

/// Simplices of the result are the strict chains s_0 < s_1 < ... < s_k of the
/// input. The new value at the vertex for s is the mean of alpha over s.
Subdivision barycentric_subdivide(const SimplicialComplex& complex, const PLFunction& alpha);

/// `times` successive subdivisions; `times == 0` returns the input unchanged
/// (with the identity carrier).
Subdivision barycentric_subdivide(const SimplicialComplex& complex, const PLFunction& alpha,
                                  std::size_t times);

/// Successive set-difference sizes (|A_0|, |A_1 \ A_0|, ...) of a chain of
/// vertex subsets.
struct Signature {
  std::vector<std::size_t> parts;

  std::size_t total() const;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

/// Signature bookkeeping for the first subdivision of the standard n-simplex.
/// `counts` tallies the simplices of each signature. `grouped_sums` holds, per
/// signature, the sum of (-1)^dim times the barycenter of each such simplex,
/// written in barycentric coordinates of the n-simplex (one entry per
/// original vertex).
struct SignatureCensus {
  std::size_t dimension = 0;
  std::map<Signature, std::uint64_t> counts;
  std::map<Signature, std::vector<Rational>> grouped_sums;

  std::uint64_t total_count() const;
};

SignatureCensus signature_census(std::size_t n);

}  // namespace curvcalc
