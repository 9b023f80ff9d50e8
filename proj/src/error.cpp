#include "kronperm/error.hpp"

namespace kronperm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::ZeroDenominator: return "ZeroDenominator";
  case ErrorCode::NegativeRadicand: return "NegativeRadicand";
  case ErrorCode::RationalInput: return "RationalInput";
  case ErrorCode::PeriodNotFound: return "PeriodNotFound";
  case ErrorCode::StreamExhausted: return "StreamExhausted";
  case ErrorCode::IdentityViolation: return "IdentityViolation";
  case ErrorCode::PrecisionBudgetExceeded: return "PrecisionBudgetExceeded";
  case ErrorCode::RationalAlpha: return "RationalAlpha";
  case ErrorCode::NotCoprime: return "NotCoprime";
  case ErrorCode::SizeLimit: return "SizeLimit";
  case ErrorCode::NotPalindromic: return "NotPalindromic";
  case ErrorCode::WrongBranch: return "WrongBranch";
  case ErrorCode::OddIndex: return "OddIndex";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

} // namespace kronperm
