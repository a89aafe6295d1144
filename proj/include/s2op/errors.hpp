#pragma once

#include <stdexcept>
#include <string>

namespace s2op {

/// Stable machine-readable error codes. The CLI maps these 1:1 onto the
/// "error" field of its JSON error object.
enum class ErrorCode {
    ZeroConstantTerm,
    InvalidAutomorphism,
    InvalidBeta,
    OutsideDisk,
    InsufficientSamples,
    BudgetTooSmall,
    BoundViolation,
    NonConverged,
    InvalidInput,
    UsageError,
};

const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(errorCodeName(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

/// Thrown by sectionNorm when the power iteration hits its iteration cap
/// before the Rayleigh quotients settle. Carries the last estimate.
class NonConvergedError : public Error {
  public:
    NonConvergedError(double bestEstimate, int iterations, const std::string& detail)
        : Error(ErrorCode::NonConverged, detail),
          bestEstimate_(bestEstimate),
          iterations_(iterations) {}

    double bestEstimate() const { return bestEstimate_; }
    int iterations() const { return iterations_; }

  private:
    double bestEstimate_;
    int iterations_;
};

}  // namespace s2op
