#pragma once

#include <stdexcept>
#include <string>

namespace zerodiv {

enum class ErrorCode {
  ParseError,
  ZeroDenominator,
  UnknownGenerator,
  InvalidSpec,
  FieldMismatch,
  GroupMismatch,
  ZeroInversion,
  SupportSize,
  IdentityNotInSupport,
  ZeroElement,
  NotAnnihilating,
  InvalidStructure,
  FixedPointPresent,
  DegenerateC,
  NoOrderThreeElement,
  InternalInconsistency,
  WitnessVerificationFailed,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Library-wide exception. `column` is the 1-based position for parse
/// errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t column = 0)
      : std::runtime_error(message), code_(code), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::size_t column_;
};

}  // namespace zerodiv
