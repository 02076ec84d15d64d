#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace curvcalc {

/// Exact rational arithmetic for every combinatorial integral.
using Rational = mpq_class;

/// Renders in lowest terms as `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts `p`, `p/q`, and finite decimals such as `-0.125` or `2.5e-3`;
/// decimals are converted exactly. Throws Error(kParseError).
Rational parse_rational(std::string_view text);

/// (-1)^k as a small integer.
constexpr int alternating_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace curvcalc
