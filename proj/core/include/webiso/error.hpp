#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace webiso {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands that cannot be combined (dimension, order, base or center mismatch).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value is undefined at the base point (division by zero, unsupported exp scale).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Node-count or coefficient-size guard tripped.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// The input is not a web at its base point.
class InvalidWebError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed; these indicate a bug or a contradiction
/// with the structure theorem and map to exit code 3 in the CLI.
class ConsistencyAlarm : public Error {
 public:
  using Error::Error;
};

}  // namespace webiso
