#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pixmask {

/// Base class for every error raised by the pixmask core.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A region does not fit inside the image it is applied to.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of two operands disagree, or an element count does not match
/// the requested shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Pearson correlation requested on a zero-variance plane.
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

/// Failure reading or writing a file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (sidecar metadata, CSV report, region text).
/// `line` is 1-based; 0 means the problem is not tied to one line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pixmask
