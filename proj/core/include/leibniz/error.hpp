#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class ErrorCode {
  kParseError,
  kValidationError,
  kDuplicateEntry,
  kUnknownLabel,
  kDimensionMismatch,
  kAlgebraMismatch,
  kFailsToSeparate,
  kNotASubalgebra,
  kNotNilpotent,
  kNotCartan,
  kNotFound,
  kCertificateFailed,
  kQuotientNotLie,
  kHypothesisViolated,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported through this type.
// Internal consistency violations (bugs) use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leibniz
