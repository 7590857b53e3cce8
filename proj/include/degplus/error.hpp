#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degplus {

enum class ErrorCode {
  ZeroPolynomial,
  NonPositiveScale,
  ZeroConstantTerm,
  DegreeTooLow,
  NoNonzeroRoots,
  PrecisionExhausted,
  NotMonic,
  BadDegree,
  NotQuadratic,
  NotCubic,
  WrongClass,
  WrongShape,
  AngleTooLarge,
  NotSquarefree,
  DegreeTooSmall,
  CapExceeded,
  BudgetTooSmall,
  FactorizationMismatch,
  InfiniteDegPlus,
  PositiveRootPresent,
  EmptyGrid,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `code()` identifies the
/// violated precondition or exhausted resource.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace degplus
