#include "wigstat/errors.hpp"

namespace wigstat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kOutOfDomain: return "out-of-domain";
    case ErrorCode::kDegenerateDistribution: return "degenerate-distribution";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kDegenerateLine: return "degenerate-line";
    case ErrorCode::kEmptyStatistics: return "empty-statistics";
    case ErrorCode::kInvalidOperator: return "invalid-operator";
    case ErrorCode::kNumerical: return "numerical";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace wigstat
