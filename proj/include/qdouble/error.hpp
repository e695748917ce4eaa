#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdouble {

enum class ErrorCode {
  InvalidInput,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotSubgroup,
  NotNormal,
  NotAutomorphism,
  NotRightAction,
  NotNormalized,
  Condition2Violation,
  Condition3Violation,
  Condition4Violation,
  NotCentral,
  ActsNontrivially,
  ModulusMismatch,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Thrown for contract violations on inputs. `witness` carries the offending
// element indices or tuple, in the order named by the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<int> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

// Failures of identities that hold by theorem; seeing one means a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message, std::vector<int> witness = {})
      : Error(ErrorCode::Internal, message, std::move(witness)) {}
};

}  // namespace qdouble
