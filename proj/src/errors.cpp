#include "adcap/errors.hpp"

namespace adcap {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::BoundaryOptimum: return "BoundaryOptimum";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NumericFailure: return "NumericFailure";
    case ErrorCode::NotSupercritical: return "NotSupercritical";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ScaleCap: return "ScaleCap";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

int error_exit_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNegativeDefinite:
    case ErrorCode::SingularMatrix:
    case ErrorCode::NumericFailure:
      return 2;
    case ErrorCode::BoundaryOptimum:
    case ErrorCode::NotSupercritical:
    case ErrorCode::SearchExhausted:
      return 3;
    default:
      return 1;
  }
}

}  // namespace adcap
