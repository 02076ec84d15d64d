#include "curvcalc/rational.hpp"

#include <regex>

#include "curvcalc/error.hpp"

namespace curvcalc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFace: return "MissingFace";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidSimplex: return "InvalidSimplex";
    case ErrorCode::kForeignCell: return "ForeignCell";
    case ErrorCode::kCarrierTooHighDimensional: return "CarrierTooHighDimensional";
    case ErrorCode::kDegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::kExactUnavailable: return "ExactUnavailable";
    case ErrorCode::kPieceNotSubcomplex: return "PieceNotSubcomplex";
    case ErrorCode::kNonGenericDirection: return "NonGenericDirection";
    case ErrorCode::kCarrierMismatch: return "CarrierMismatch";
    case ErrorCode::kUnknownSimplex: return "UnknownSimplex";
    case ErrorCode::kNotComposable: return "NotComposable";
    case ErrorCode::kInvalidMap: return "InvalidMap";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kNegativeWarp: return "NegativeWarp";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex kFraction(R"(([+-]?\d+)(?:/(\d+))?)");
  static const std::regex kDecimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");

  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kFraction)) {
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
    mpz_class den = m[2].matched ? mpz_class(m[2].str(), 10) : mpz_class(1);
    if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, m, kDecimal) && (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class mantissa(digits.empty() ? "0" : digits, 10);
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) exponent += std::stol(m[4].str());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale, 1);
    q.canonicalize();
    if (m[1].str() == "-") q = -q;
    return q;
  }
  throw Error(ErrorCode::kParseError, "not a rational number: '" + s + "'");
}

}  // namespace curvcalc
