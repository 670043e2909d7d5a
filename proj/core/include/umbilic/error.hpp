#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace umbilic {

enum class ErrorCode {
  kDimensionMismatch,
  kNotSymmetric,
  kNotSpacelike,
  kGramMismatch,
  kHypothesisViolation,
  kBadDimensions,
  kInvalidObject,
  kOnAxis,
  kNotUnitSpacelike,
  kPointAtInfinity,
  kNotLorentz,
  kNotBlockIsometry,
  kAtCenter,
  kDependentGenerators,
  kNotSubstantial,
  kDimMismatch,
  kNotCongruent,
  kMalformedSpec,
  kNonPositiveInvariant,
  kInfeasibleInvariant,
  kWrongContext,
};

/// Stable CamelCase name of an error code, used in machine-readable output.
std::string_view to_string(ErrorCode code);

/// True for errors that report a violated mathematical precondition (for
/// example a non-substantial input to a congruence decision) rather than a
/// malformed input.
bool is_precondition_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace umbilic
