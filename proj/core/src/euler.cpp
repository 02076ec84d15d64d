#include "curvcalc/euler.hpp"

#include <algorithm>

namespace curvcalc {

void ConstructibleFunction::set(std::size_t cell, const Rational& value) {
  if (cell >= coefficients_.size()) {
    throw Error(ErrorCode::kForeignCell, "cell " + std::to_string(cell) + " is not in the carrier");
  }
  coefficients_[cell] = value;
}

void ConstructibleFunction::add(std::size_t cell, const Rational& value) {
  if (cell >= coefficients_.size()) {
    throw Error(ErrorCode::kForeignCell, "cell " + std::to_string(cell) + " is not in the carrier");
  }
  coefficients_[cell] += value;
}

bool ConstructibleFunction::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& q) { return q == 0; });
}

ConstructibleFunction& ConstructibleFunction::operator+=(const ConstructibleFunction& other) {
  if (other.carrier_size() != carrier_size()) {
    throw Error(ErrorCode::kCarrierMismatch, "adding functions on different carriers");
  }
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

ConstructibleFunction& ConstructibleFunction::operator*=(const Rational& scale) {
  for (Rational& q : coefficients_) q *= scale;
  return *this;
}

ConstructibleFunction closure_indicator(const SimplicialComplex& complex, const Simplex& simplex) {
  ConstructibleFunction s(complex.size());
  for (const Simplex& face : simplex.faces()) {
    auto index = complex.index_of(face);
    if (!index) throw Error(ErrorCode::kForeignCell, to_string(face) + " is not in the carrier");
    s.set(*index, 1);
  }
  return s;
}

long chi_c(const SimplicialComplex& complex, std::span<const Simplex> cells) {
  long chi = 0;
  for (const Simplex& s : cells) {
    if (!complex.contains(s)) throw Error(ErrorCode::kForeignCell, to_string(s) + " is not in the carrier");
    chi += alternating_sign(s.dimension());
  }
  return chi;
}

EulerValue floor_integral(const SimplicialComplex& complex, const PLFunction& alpha) {
  alpha.require_defined_on(complex);
  Rational total = 0;
  for (const Simplex& s : complex.simplices()) total += alternating_sign(s.dimension()) * alpha.min_on(s);
  return total;
}

EulerValue ceil_integral(const SimplicialComplex& complex, const PLFunction& alpha) {
  alpha.require_defined_on(complex);
  Rational total = 0;
  for (const Simplex& s : complex.simplices()) total += alternating_sign(s.dimension()) * alpha.max_on(s);
  return total;
}

namespace {

mpz_class round_rational(const Rational& q, Rounding rounding) {
  mpz_class out;
  if (rounding == Rounding::kFloor) {
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  } else {
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  }
  return out;
}

}  // namespace

EulerValue level_set_integral_1d(const SimplicialComplex& complex, const PLFunction& alpha,
                                 long n, Rounding rounding) {
  if (complex.dimension() > 1) {
    throw Error(ErrorCode::kCarrierTooHighDimensional, "level-set integral needs a complex of dimension <= 1");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "level count must be >= 1");
  alpha.require_defined_on(complex);

  // Work in units scaled by n: the integrand is round(n alpha) / n.
  const Rational scale(n);
  Rational total = 0;
  for (const Simplex& s : complex.simplices()) {
    if (s.size() == 1) {
      total += Rational(round_rational(scale * alpha(s[0]), rounding));
      continue;
    }
    Rational lo = scale * alpha(s[0]);
    Rational hi = scale * alpha(s[1]);
    if (hi < lo) std::swap(lo, hi);
    // Breakpoints: integers strictly inside (lo, hi). Each is an open point
    // (chi_c = +1); the gaps between them are open intervals (chi_c = -1).
    std::vector<Rational> cuts{lo};
    mpz_class first;
    mpz_fdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    for (mpz_class m = first + 1; Rational(m) < hi; ++m) {
      cuts.emplace_back(m);
      total += Rational(m);
    }
    cuts.push_back(hi);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      Rational mid = (cuts[k] + cuts[k + 1]) / 2;
      total -= Rational(round_rational(mid, rounding));
    }
  }
  return total / scale;
}

EulerValue tentative_integral(const SimplicialComplex& complex, const PLFunction& alpha) {
  alpha.require_defined_on(complex);
  Rational total = 0;
  for (const Simplex& s : complex.simplices()) {
    total += alternating_sign(s.dimension()) * alpha.at_barycenter(s);
  }
  return total;
}

Rational weight(const SimplicialComplex& complex, VertexId v) {
  Rational w = 0;
  for (std::size_t i : complex.star(v)) {
    const std::size_t size = complex.simplex(i).size();
    w += Rational(alternating_sign(size - 1), static_cast<unsigned long>(size));
  }
  return w;
}

std::vector<Rational> weights(const SimplicialComplex& complex) {
  std::vector<Rational> w(complex.vertex_bound(), Rational(0));
  for (const Simplex& s : complex.simplices()) {
    Rational share(alternating_sign(s.dimension()), static_cast<unsigned long>(s.size()));
    for (VertexId v : s) w[v] += share;
  }
  return w;
}

}  // namespace curvcalc
