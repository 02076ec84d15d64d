#include "curvcalc/pushforward.hpp"

#include "curvcalc/error.hpp"

namespace curvcalc {

ConstructibleFunction pushforward(const SimplicialMap& f, const ConstructibleFunction& s) {
  const SimplicialComplex& source = f.source();
  if (s.carrier_size() != source.size()) {
    throw Error(ErrorCode::kCarrierMismatch, "function does not live on the map's source");
  }
  ConstructibleFunction out(f.target().size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (s[i] == 0) continue;
    const std::size_t j = f.image_index(i);
    const std::size_t drop = source.dimension_of(i) - f.target().dimension_of(j);
    out.add(j, drop % 2 == 0 ? s[i] : Rational(-s[i]));
  }
  return out;
}

long fiber_euler(const SimplicialMap& f, const Simplex& tau) {
  const std::size_t j = f.target().require_index(tau);
  const ConstructibleFunction pushed = pushforward(f, unit_function(f.source()));
  return pushed[j].get_num().get_si();
}

bool check_functoriality(const SimplicialMap& f, const SimplicialMap& g, const ConstructibleFunction& s) {
  const SimplicialMap fg = compose(f, g);
  return pushforward(fg, s) == pushforward(f, pushforward(g, s));
}

}  // namespace curvcalc
