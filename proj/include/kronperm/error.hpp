#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kronperm {

enum class ErrorCode {
  ZeroDenominator,
  NegativeRadicand,
  RationalInput,
  PeriodNotFound,
  StreamExhausted,
  IdentityViolation,
  PrecisionBudgetExceeded,
  RationalAlpha,
  NotCoprime,
  SizeLimit,
  NotPalindromic,
  WrongBranch,
  OddIndex,
  ParseError,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the input where it was detected.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position), detail_(what) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

} // namespace kronperm
