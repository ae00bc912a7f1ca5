#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanglecospan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Dimensions or objects of two operands do not fit together.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SourceMismatch : public ShapeMismatch {
 public:
  using ShapeMismatch::ShapeMismatch;
};

class NonFreeSource : public Error {
 public:
  NonFreeSource() : Error("saturated kernel requires a free source module") {}
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NotLagrangian : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotEndomorphism : public Error {
 public:
  using Error::Error;
};

class NotABraidWord : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial, matrix or tangle-word text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownGenerator : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

/// A layer of a tangle word does not fit the boundary produced by the previous layers.
class TypeError : public Error {
 public:
  TypeError(const std::string& what, std::size_t layer) : Error(what), layer_(layer) {}
  std::size_t layer() const noexcept { return layer_; }

 private:
  std::size_t layer_;
};

class BoundaryMismatch : public TypeError {
 public:
  using TypeError::TypeError;
};

class CapOrientation : public TypeError {
 public:
  using TypeError::TypeError;
};

}  // namespace tanglecospan
