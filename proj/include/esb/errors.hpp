#pragma once

#include <stdexcept>
#include <string>

namespace esb {

/// Base for all library errors. Each subclass maps to one CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

/// Input is not a valid f/h/g-vector, O-sequence, Hilbert function, ...
class ValidationError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// Arguments are well formed but violate the hypothesis of a bound.
class PreconditionError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// Oracle input exceeds the configured vertex or generator limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

/// An oracle count exceeded a proven bound. Never expected.
class BoundViolation : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
};

}  // namespace esb
