#pragma once

#include <stdexcept>
#include <string>

namespace radical {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Matrix dimension out of range, or operands of mismatched size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Polynomial degree outside what an operation accepts (including the
/// degenerate zero-leading-coefficient case).
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// An internal structural assumption failed: a conjugated matrix that should
/// be circulant is not, a radical sign search found no admissible assignment,
/// or a divisor that must stay away from zero did not.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Input text rejected by the polynomial parser; carries the character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace radical
