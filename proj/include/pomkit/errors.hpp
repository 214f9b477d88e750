#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pomkit {

// Structured failure kinds; args() carries the witness data (indices,
// counts) in the order documented at each throw site.
enum class ErrorKind {
  OutOfRangeEntry,
  IdentityLawViolation,
  AssociativityViolation,
  NotAHom,
  SizeMismatch,
  SizeGuardExceeded,
  IllFormedCongruence,
  NotSurjective,
  IncompatibleOrder,
  ConeNotRightNormal,
  NotSchreier,
  InvalidAction,
  NotMonotone,
  TypeMismatch,
  SyntaxError,
  UnknownReference,
  ValidationError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<long long> args = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        args_(std::move(args)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<long long>& args() const noexcept { return args_; }

 private:
  ErrorKind kind_;
  std::vector<long long> args_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace pomkit
