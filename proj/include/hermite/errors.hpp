#pragma once

#include <stdexcept>
#include <string>

namespace hermite {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `location()` names where parsing stopped
/// (a JSON path such as `coefficients[2][1][0]` or a byte offset).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string location)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic or precondition violation (division by zero, bad normalization).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A theorem-style check was invoked on a mask that does not meet its hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A constructive request has no solution (synthesis, empty windows).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermite
