#pragma once

#include <stdexcept>
#include <string>

namespace landen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad orders, degrees, shapes.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class InvalidDegree : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class DegreeTooHigh : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class ZeroPolynomial : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The integrand violates the no-real-root hypothesis.
class RealRoots : public Error {
 public:
  using Error::Error;
};

/// Failures of a numerical procedure (exit code 3 in the CLI).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class Diverged : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
/// Working precision of the float backend is exhausted; retry with more bits.
class NumericUnderflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class ZeroLeading : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class InsufficientData : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class PoleOnAxis : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class ToleranceNotMet : public NumericalError {
 public:
  using NumericalError::NumericalError;
};
class DenominatorVanishes : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Integrand document could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};
class OddDegree : public ParseError {
 public:
  using ParseError::ParseError;
};
class DegreeGap : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace landen
