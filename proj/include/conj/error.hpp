#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conjprod {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  BothZero,
  ZeroPolynomial,
  ConstantPolynomial,
  InseparableInput,
  NotSquarefree,
  NotMonic,
  NotPrime,
  NotCoprime,
  PreconditionViolated,
  FieldMismatch,
  NotIrreducible,
  NotSeparable,
  DegreeCapExceeded,
  CapExceeded,
  InternalInconsistency,
  NotInBaseField,
  EmptySet,
  IndexOutOfRange,
  HypothesisViolated,
  DoesNotDivide,
  ZeroDivisor,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code identifies the contract that
/// was broken; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace conjprod
