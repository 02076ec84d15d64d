#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "curvcalc/complex.hpp"
#include "curvcalc/error.hpp"

namespace curvcalc {

/// Anything whose cells are indexed 0..size()-1 and have a dimension:
/// SimplicialComplex and ProductCellComplex.
template <class C>
concept CellCarrier = requires(const C& c, std::size_t i) {
  { c.size() } -> std::convertible_to<std::size_t>;
  { c.dimension_of(i) } -> std::convertible_to<std::size_t>;
};

/// Finitely supported rational combination of indicators of open cells.
class ConstructibleFunction {
 public:
  ConstructibleFunction() = default;
  explicit ConstructibleFunction(std::size_t carrier_size)
      : coefficients_(carrier_size, Rational(0)) {}

  std::size_t carrier_size() const { return coefficients_.size(); }
  std::span<const Rational> coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t cell) const { return coefficients_[cell]; }

  /// Both throw Error(kForeignCell) for an index outside the carrier.
  void set(std::size_t cell, const Rational& value);
  void add(std::size_t cell, const Rational& value);

  bool is_zero() const;

  ConstructibleFunction& operator+=(const ConstructibleFunction& other);
  ConstructibleFunction& operator*=(const Rational& scale);
  friend ConstructibleFunction operator+(ConstructibleFunction a, const ConstructibleFunction& b) {
    return a += b;
  }
  friend ConstructibleFunction operator*(const Rational& scale, ConstructibleFunction a) {
    return a *= scale;
  }
  friend ConstructibleFunction operator-(ConstructibleFunction a, const ConstructibleFunction& b) {
    return a += Rational(-1) * b;
  }
  friend bool operator==(const ConstructibleFunction&, const ConstructibleFunction&) = default;

 private:
  std::vector<Rational> coefficients_;
};

using EulerValue = Rational;

/// 1 on every open cell of the carrier.
template <CellCarrier C>
ConstructibleFunction unit_function(const C& carrier) {
  ConstructibleFunction s(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) s.set(i, 1);
  return s;
}

/// Indicator of the closed simplex: 1 on each of its open faces.
ConstructibleFunction closure_indicator(const SimplicialComplex& complex, const Simplex& simplex);

/// Compactly supported Euler characteristic of a union of open cells.
/// Throws Error(kForeignCell) for an index outside the carrier.
template <CellCarrier C>
long chi_c(const C& carrier, std::span<const std::size_t> cells) {
  long chi = 0;
  for (std::size_t cell : cells) {
    if (cell >= carrier.size()) {
      throw Error(ErrorCode::kForeignCell, "cell " + std::to_string(cell) + " is not in the carrier");
    }
    chi += alternating_sign(carrier.dimension_of(cell));
  }
  return chi;
}

/// Same, naming the open simplices directly.
long chi_c(const SimplicialComplex& complex, std::span<const Simplex> cells);

/// Sum over cells of coefficient * (-1)^dim. Throws Error(kCarrierMismatch)
/// when `s` was built for a carrier of a different size.
template <CellCarrier C>
EulerValue euler_integral(const C& carrier, const ConstructibleFunction& s) {
  if (s.carrier_size() != carrier.size()) {
    throw Error(ErrorCode::kCarrierMismatch, "function does not live on this carrier");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (s[i] == 0) continue;
    if (carrier.dimension_of(i) % 2 == 0) {
      total += s[i];
    } else {
      total -= s[i];
    }
  }
  return total;
}

/// Closed form of the floor integral: sum over simplices of (-1)^dim * min of
/// alpha over the simplex's vertices.
EulerValue floor_integral(const SimplicialComplex& complex, const PLFunction& alpha);
/// As floor_integral with the maximum.
EulerValue ceil_integral(const SimplicialComplex& complex, const PLFunction& alpha);

enum class Rounding { kFloor, kCeil };

/// Exact value of the integral of (1/n) round(n alpha) on a complex of
/// dimension at most one, computed by cutting every edge at the levels where
/// round(n alpha) jumps. Throws Error(kCarrierTooHighDimensional) for
/// higher-dimensional complexes and Error(kInvalidArgument) for n < 1.
EulerValue level_set_integral_1d(const SimplicialComplex& complex, const PLFunction& alpha,
                                 long n, Rounding rounding = Rounding::kFloor);

/// Sum over simplices of (-1)^dim times alpha at the barycenter.
EulerValue tentative_integral(const SimplicialComplex& complex, const PLFunction& alpha);

/// sum_i (-1)^i / (i + 1) * #{i-simplices containing v}. Throws
/// Error(kUnknownVertex).
Rational weight(const SimplicialComplex& complex, VertexId v);
/// All vertex weights in one pass, indexed by vertex id.
std::vector<Rational> weights(const SimplicialComplex& complex);

}  // namespace curvcalc
