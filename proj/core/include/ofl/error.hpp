#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ofl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain arguments (bad coordinates, index out of range,
/// dimension mismatch, non-dominated distributions).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold (e.g. a
/// single-facility mechanism handed k > 1, or a trivial distribution handed
/// to specialize()).
class PreconditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An enumeration would exceed its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A document could not be parsed. `field()` is a JSON pointer to the
/// offending field, or a "line L, column C" locator for syntax errors.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace ofl
