#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace adcap {

// Every failure the library can report.  The CLI maps each code to one of
// three process exit classes: invalid input (1), numeric failure (2),
// domain-hypothesis failure (3).
enum class ErrorCode {
  DomainError,
  DimensionMismatch,
  AsymmetricMatrix,
  SymmetryViolation,
  NotNegativeDefinite,
  BoundaryOptimum,
  SingularMatrix,
  NumericFailure,
  NotSupercritical,
  SearchExhausted,
  ScaleCap,
  SchemaError,
};

const char* error_code_name(ErrorCode code);

// Exit class for the CLI: 1 = input/schema, 2 = numeric, 3 = hypothesis.
int error_exit_class(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// The maximizer of s^t G s over the simplex landed on the boundary; carries
// the unconstrained stationary point for diagnosis.
class BoundaryOptimumError : public Error {
 public:
  BoundaryOptimumError(const std::string& message, std::vector<double> s_hat)
      : Error(ErrorCode::BoundaryOptimum, message), s_hat_(std::move(s_hat)) {}

  const std::vector<double>& stationary_point() const { return s_hat_; }

 private:
  std::vector<double> s_hat_;
};

}  // namespace adcap
