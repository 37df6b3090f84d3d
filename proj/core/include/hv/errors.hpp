#pragma once

#include <stdexcept>
#include <string>

namespace hv {

enum class ErrorKind {
  DivisionByZero,
  SpecializationPole,
  NotExact,
  RankMismatch,
  RankTooLarge,
  InvalidContext,
  InactiveCentralKey,
  VariantMismatch,
  GateViolation,
  OutOfWindow,
  LambdaMinusOne,
  NonzeroL2,
  InvalidParams,
  UnstableTruncation,
  SyntaxError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hv
