#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace badred {

enum class ErrorCode {
  InvalidInput,
  ZeroInput,
  BudgetExceeded,
  DivisionByZero,
  ReducibleMinPoly,
  NonMonic,
  NonIntegral,
  IndexDivisorUnsupported,
  ZeroElement,
  NotPIntegral,
  PrecisionExhausted,
  SyntaxError,
  UnknownVariable,
  ExponentOverflow,
  ZeroPolynomial,
  DegenerateDirectionExhausted,
  NonBinary,
  NonHomogeneous,
  DegreeMismatch,
  NonSquare,
  InfiniteSupport,
  DimensionOutOfRange,
  DegenerateShape,
  AllMinorsZero,
  DegenerateSection,
  CommonFactor,
  InconsistentDegrees,
  DegenerateReduction,
  NotGeometricallyIntegralOverK,
  NonBirationalSuspected,
  IOError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Carries the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace badred
