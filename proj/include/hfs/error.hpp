#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfs {

// Every failure the engine reports maps to exactly one of these variants.
enum class ErrorKind {
  ParseError,
  ValidationError,
  InvalidComplex,
  NotASubcomplex,
  EmptyHomology,
  SlopeTooSmall,
  NotFibered,
  NonCoprime,
  NonPositiveSlope,
  SlopeNotAbove,
  Indeterminate,
  UnknownGenerator,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::EmptyHomology: return "EmptyHomology";
    case ErrorKind::SlopeTooSmall: return "SlopeTooSmall";
    case ErrorKind::NotFibered: return "NotFibered";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NonPositiveSlope: return "NonPositiveSlope";
    case ErrorKind::SlopeNotAbove: return "SlopeNotAbove";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the 1-based line it occurred on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace hfs
