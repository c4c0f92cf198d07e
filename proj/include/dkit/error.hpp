#pragma once

#include <stdexcept>
#include <string>

namespace dkit {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different polynomial rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dkit
