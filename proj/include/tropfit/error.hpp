#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropfit {

enum class ErrorCode {
  InversionOfZero,
  ZeroToNonpositivePower,
  InvalidValue,
  DimensionMismatch,
  ZeroVector,
  NonRegularInput,
  ZeroAbscissa,
  ZeroArgument,
  InvalidDegrees,
  RangeTooNarrow,
  InvalidConfig,
  MalformedRow,
  EmptyFile,
  MalformedModel,
  IoFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::ZeroToNonpositivePower: return "ZeroToNonpositivePower";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonRegularInput: return "NonRegularInput";
    case ErrorCode::ZeroAbscissa: return "ZeroAbscissa";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::InvalidDegrees: return "InvalidDegrees";
    case ErrorCode::RangeTooNarrow: return "RangeTooNarrow";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::MalformedModel: return "MalformedModel";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure tied to a 1-based input line.
class LineError : public Error {
 public:
  LineError(ErrorCode code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tropfit
