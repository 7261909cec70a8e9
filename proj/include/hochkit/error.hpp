#pragma once

#include <stdexcept>
#include <string>

namespace hochkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a pair of differentials does not compose to zero.
class NotAComplex : public Error {
 public:
  using Error::Error;
};

class InvalidChainMap : public Error {
 public:
  using Error::Error;
};

class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class InvalidModule : public Error {
 public:
  using Error::Error;
};

/// A requested degree lies outside the range a truncated construction can
/// answer for exactly.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Coface/codegeneracy data that violates a cosimplicial identity.
class InvalidCosimplicial : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hochkit
