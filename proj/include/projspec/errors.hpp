#pragma once

#include <stdexcept>
#include <string>

namespace projspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matrix sizes, coordinate counts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition (spectrum point supplied,
/// indeterminate point, non-commuting tuple, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range user input (files, configs, sizes).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Reading or writing an output file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity breached its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace projspec
