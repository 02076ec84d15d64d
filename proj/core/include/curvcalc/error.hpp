#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvcalc {

// Numeric values are stable: the CLI prints them and scripts match on them.
enum class ErrorCode : int {
  kMissingFace = 10,
  kUnknownVertex = 11,
  kParseError = 12,
  kDimensionMismatch = 13,
  kInvalidSimplex = 14,
  kForeignCell = 20,
  kCarrierTooHighDimensional = 21,
  kDegenerateSimplex = 30,
  kExactUnavailable = 31,
  kPieceNotSubcomplex = 32,
  kNonGenericDirection = 40,
  kCarrierMismatch = 50,
  kUnknownSimplex = 51,
  kNotComposable = 52,
  kInvalidMap = 53,
  kGridTooCoarse = 60,
  kNegativeWarp = 61,
  kInvalidArgument = 70,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace curvcalc
