#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chartbraid {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// Precondition violated by the caller (bad index, degree mismatch, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A semantic invariant does not hold for the input. `invariant` names it.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& what)
      : Error(invariant + ": " + what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// Input or intermediate data exceeded a configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Broken internal consistency (two algorithms disagree, catalog bug).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chartbraid
