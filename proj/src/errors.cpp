#include "s2op/errors.hpp"

namespace s2op {

const char* errorCodeName(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
        case ErrorCode::InvalidBeta: return "InvalidBeta";
        case ErrorCode::OutsideDisk: return "OutsideDisk";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::NonConverged: return "NonConverged";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

}  // namespace s2op
