#pragma once

#include <stdexcept>
#include <string>

namespace betabranch {

enum class ErrorKind {
  InverseOfZero,
  OutOfRange,
  BaseOutOfRange,
  NotInSwitch,
  IncompleteGraph,
  FieldMismatch,
  InvalidArgument,
  EnumerationBound,
};

const char* to_string(ErrorKind kind);

/// Domain error raised by library operations; `kind` names the failed precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed textual input (polynomials, words, expressions, base specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error("1:" + std::to_string(column) + ": " + message), message_(message), column_(column) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t column_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InverseOfZero: return "InverseOfZero";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BaseOutOfRange: return "BaseOutOfRange";
    case ErrorKind::NotInSwitch: return "NotInSwitch";
    case ErrorKind::IncompleteGraph: return "IncompleteGraph";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EnumerationBound: return "EnumerationBound";
  }
  return "Error";
}

}  // namespace betabranch
