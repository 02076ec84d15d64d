#include "curvcalc/sampling.hpp"

#include <cmath>

namespace curvcalc {

double binomial_std_error(std::size_t hits, std::size_t samples) {
  if (samples == 0) return 0.0;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

}  // namespace curvcalc
