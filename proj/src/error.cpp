#include "qdouble/error.hpp"

namespace qdouble {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotRightAction: return "NotRightAction";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::Condition2Violation: return "Condition2Violation";
    case ErrorCode::Condition3Violation: return "Condition3Violation";
    case ErrorCode::Condition4Violation: return "Condition4Violation";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::ActsNontrivially: return "ActsNontrivially";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<int> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), witness_(std::move(witness)) {}

}  // namespace qdouble
