#include "badred/error.hpp"

namespace badred {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ReducibleMinPoly: return "ReducibleMinPoly";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::IndexDivisorUnsupported: return "IndexDivisorUnsupported";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotPIntegral: return "NotPIntegral";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegenerateDirectionExhausted: return "DegenerateDirectionExhausted";
    case ErrorCode::NonBinary: return "NonBinary";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::InfiniteSupport: return "InfiniteSupport";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::AllMinorsZero: return "AllMinorsZero";
    case ErrorCode::DegenerateSection: return "DegenerateSection";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::InconsistentDegrees: return "InconsistentDegrees";
    case ErrorCode::DegenerateReduction: return "DegenerateReduction";
    case ErrorCode::NotGeometricallyIntegralOverK: return "NotGeometricallyIntegralOverK";
    case ErrorCode::NonBirationalSuspected: return "NonBirationalSuspected";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace badred
