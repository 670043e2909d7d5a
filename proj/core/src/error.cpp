#include "umbilic/error.hpp"

namespace umbilic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotSpacelike: return "NotSpacelike";
    case ErrorCode::kGramMismatch: return "GramMismatch";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kBadDimensions: return "BadDimensions";
    case ErrorCode::kInvalidObject: return "InvalidObject";
    case ErrorCode::kOnAxis: return "OnAxis";
    case ErrorCode::kNotUnitSpacelike: return "NotUnitSpacelike";
    case ErrorCode::kPointAtInfinity: return "PointAtInfinity";
    case ErrorCode::kNotLorentz: return "NotLorentz";
    case ErrorCode::kNotBlockIsometry: return "NotBlockIsometry";
    case ErrorCode::kAtCenter: return "AtCenter";
    case ErrorCode::kDependentGenerators: return "DependentGenerators";
    case ErrorCode::kNotSubstantial: return "NotSubstantial";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kNotCongruent: return "NotCongruent";
    case ErrorCode::kMalformedSpec: return "MalformedSpec";
    case ErrorCode::kNonPositiveInvariant: return "NonPositiveInvariant";
    case ErrorCode::kInfeasibleInvariant: return "InfeasibleInvariant";
    case ErrorCode::kWrongContext: return "WrongContext";
  }
  return "Unknown";
}

bool is_precondition_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSubstantial:
    case ErrorCode::kDimMismatch:
    case ErrorCode::kNotCongruent:
    case ErrorCode::kHypothesisViolation:
    case ErrorCode::kGramMismatch:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace umbilic
