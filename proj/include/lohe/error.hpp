#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lohe {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotSkewSymmetric,
  NotStronglyConnected,
  NumericalFailure,
  CharacterizationMismatch,
  StepTooLarge,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a stable message and exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace lohe
