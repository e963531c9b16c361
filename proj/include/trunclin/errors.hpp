#pragma once

#include <stdexcept>
#include <string>

namespace trunclin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's preconditions
/// (bad dimension, NaN, invalid label, malformed file, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidNumber : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidLabel : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A sign code that no total order of the product vector can produce.
class MalformedCode : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A result failed its own post-hoc verification. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace trunclin
