#pragma once

#include <stdexcept>
#include <string>

namespace sdn {

// Base class for every error raised by the library. The CLI maps each
// subclass onto a distinct process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed argument.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input bytes do not follow the expected file format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Training data that admits no similarity-domain model, e.g. the same
// coordinate carrying both labels.
class DegenerateDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The dual solver hit its update budget before reaching the KKT tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double kkt_violation)
      : Error(what), kkt_violation_(kkt_violation) {}

  double kkt_violation() const noexcept { return kkt_violation_; }

 private:
  double kkt_violation_;
};

// Thresholding removed every candidate skeleton node.
class EmptySkeletonError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace sdn
