#include "hv/errors.hpp"

namespace hv {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SpecializationPole: return "SpecializationPole";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::InactiveCentralKey: return "InactiveCentralKey";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::GateViolation: return "GateViolation";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::LambdaMinusOne: return "LambdaMinusOne";
    case ErrorKind::NonzeroL2: return "NonzeroL2";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnstableTruncation: return "UnstableTruncation";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace hv
