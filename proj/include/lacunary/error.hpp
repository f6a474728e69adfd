#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lacunary {

enum class ErrorCode {
  InvalidArgument,
  BudgetExceeded,
  Inconsistent,
  SingularDerivative,
  SearchExhausted,
  SquareD,
  NotApplicable,
  PrecisionTooLow,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::SingularDerivative: return "SingularDerivative";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SquareD: return "SquareD";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_budget() const noexcept {
    return code_ == ErrorCode::BudgetExceeded ||
           code_ == ErrorCode::SearchExhausted;
  }

 private:
  ErrorCode code_;
};

}  // namespace lacunary
