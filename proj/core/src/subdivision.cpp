#include "curvcalc/subdivision.hpp"

#include <algorithm>

#include "curvcalc/error.hpp"

namespace curvcalc {

namespace {

// Emits every strict chain whose largest element is `chain.front()`; the
// chain is held largest-first so that each step shrinks the current tail.
template <class Emit>
void descend(const SimplicialComplex& complex, std::vector<std::size_t>& chain, Emit& emit) {
  emit(chain);
  const Simplex& tail = complex.simplex(chain.back());
  if (tail.size() == 1) return;
  for (const Simplex& face : tail.faces()) {
    if (face.size() == tail.size()) continue;
    chain.push_back(*complex.index_of(face));
    descend(complex, chain, emit);
    chain.pop_back();
  }
}

template <class Emit>
void for_each_chain(const SimplicialComplex& complex, Emit&& emit) {
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < complex.size(); ++i) {
    chain.assign(1, i);
    descend(complex, chain, emit);
  }
}

std::string barycenter_name(const SimplicialComplex& complex, const Simplex& s) {
  if (s.size() == 1) return complex.vertex_name(s[0]);
  std::string name = "[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) name += ",";
    name += complex.vertex_name(s[k]);
  }
  return name + "]";
}

}  // namespace

Subdivision barycentric_subdivide(const SimplicialComplex& complex, const PLFunction& alpha) {
  alpha.require_defined_on(complex);

  std::vector<Simplex> chains;
  for_each_chain(complex, [&](const std::vector<std::size_t>& chain) {
    std::vector<VertexId> ids(chain.rbegin(), chain.rend());
    chains.emplace_back(std::move(ids));
  });
  std::sort(chains.begin(), chains.end());

  std::vector<Rational> values;
  std::vector<std::string> names;
  std::vector<std::size_t> carrier;
  values.reserve(complex.size());
  names.reserve(complex.size());
  carrier.reserve(complex.size());
  for (std::size_t i = 0; i < complex.size(); ++i) {
    const Simplex& s = complex.simplex(i);
    values.push_back(alpha.at_barycenter(s));
    names.push_back(barycenter_name(complex, s));
    carrier.push_back(i);
  }
  return Subdivision{from_closed_sorted(std::move(chains), std::move(names)),
                     PLFunction(std::move(values)), std::move(carrier)};
}

Subdivision barycentric_subdivide(const SimplicialComplex& complex, const PLFunction& alpha,
                                  std::size_t times) {
  if (times == 0) {
    std::vector<std::size_t> carrier(complex.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) carrier[i] = i;
    return Subdivision{complex, alpha, std::move(carrier)};
  }
  Subdivision current = barycentric_subdivide(complex, alpha);
  for (std::size_t k = 1; k < times; ++k) {
    current = barycentric_subdivide(current.complex, current.alpha);
  }
  return current;
}

std::size_t Signature::total() const {
  std::size_t sum = 0;
  for (std::size_t p : parts) sum += p;
  return sum;
}

std::string to_string(const Signature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.parts[i]);
  }
  return out + ")";
}

std::uint64_t SignatureCensus::total_count() const {
  std::uint64_t sum = 0;
  for (const auto& [sig, count] : counts) sum += count;
  return sum;
}

SignatureCensus signature_census(std::size_t n) {
  if (n > 8) throw Error(ErrorCode::kInvalidArgument, "census is limited to n <= 8");
  std::vector<VertexId> ids(n + 1);
  for (VertexId v = 0; v <= n; ++v) ids[v] = v;
  const SimplicialComplex simplex = SimplicialComplex::from_maximal({Simplex(ids)});

  SignatureCensus census;
  census.dimension = n;
  for_each_chain(simplex, [&](const std::vector<std::size_t>& chain) {
    // Smallest set first.
    Signature sig;
    std::size_t previous = 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const std::size_t size = simplex.simplex(*it).size();
      sig.parts.push_back(size - previous);
      previous = size;
    }
    ++census.counts[sig];

    // Barycenter of the chain simplex: the mean of the barycenters of its sets.
    const std::size_t length = chain.size();
    std::vector<Rational> point(n + 1, Rational(0));
    for (std::size_t index : chain) {
      const Simplex& set = simplex.simplex(index);
      Rational share(1, static_cast<unsigned long>(set.size() * length));
      for (VertexId v : set) point[v] += share;
    }
    auto& sum = census.grouped_sums[sig];
    if (sum.empty()) sum.assign(n + 1, Rational(0));
    const int sign = alternating_sign(length - 1);
    for (std::size_t v = 0; v <= n; ++v) sum[v] += sign * point[v];
  });
  for (auto& [sig, sum] : census.grouped_sums) {
    for (Rational& q : sum) q.canonicalize();
  }
  return census;
}

}  // namespace curvcalc
