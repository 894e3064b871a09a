#pragma once

#include <stdexcept>
#include <string>

namespace zforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (k even, Re x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of zeta or gamma.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested accuracy cannot be reached (overflow, non-finite value,
/// truncation limit exceeded, unmet tail bound).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A symbolic value expected to be real carries an imaginary coefficient.
class ImaginaryResidueError : public Error {
 public:
  using Error::Error;
};

/// Linear elimination collapsed to the trivial relation.
class DegenerateResultError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zforge
