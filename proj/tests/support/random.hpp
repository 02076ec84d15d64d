#pragma once

#include <random>
#include <vector>

#include "curvcalc/complex.hpp"
#include "curvcalc/euler.hpp"
#include "curvcalc/simplicial_map.hpp"

namespace curvcalc::testing {

using Rng = std::mt19937_64;

/// p/q with |p| <= 9 and 1 <= q <= 6.
Rational random_rational(Rng& rng);

/// Random complex on 1..max_vertices dense vertices with simplices of
/// dimension <= max_dim. Every vertex is used.
SimplicialComplex random_complex(Rng& rng, std::size_t max_vertices, std::size_t max_dim);

PLFunction random_alpha(Rng& rng, const SimplicialComplex& complex);

/// Each cell is nonzero with probability one half.
ConstructibleFunction random_function(Rng& rng, std::size_t carrier_size);

/// Every vertex map that is simplicial.
std::vector<SimplicialMap> all_simplicial_maps(const std::shared_ptr<const SimplicialComplex>& source,
                                               const std::shared_ptr<const SimplicialComplex>& target);

/// Small complexes (at most five vertices) used for exhaustive map sweeps.
std::vector<std::shared_ptr<const SimplicialComplex>> small_complexes();

}  // namespace curvcalc::testing
