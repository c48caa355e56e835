#pragma once

#include <stdexcept>
#include <string>

namespace idemring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: ragged or out-of-range tables, bad files, bad labels.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A materialization would exceed the configured element bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class ConditionError : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined on a one-element semiring.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace idemring
