#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A letter does not belong to the alphabet an operation expects.
class DomainMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A morphism cannot be iterated from the requested letter.
class NotProlongableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The input is valid but outside what the implementation handles.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured size.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wordlab
