#pragma once

#include <stdexcept>
#include <string>

namespace crosscap {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed rotation system or edge pairing.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Curve data, templates or partitions that violate a stated constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Out-of-range numeric parameters (n, k, r, gap, sizes).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Twisting about a one-sided curve.
class TwistForbidden : public Error {
 public:
  using Error::Error;
};

// Text input that does not match the expected grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Power iteration hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Spectral bound requested on a partition whose routing conditions fail.
class ConditionsUnverified : public Error {
 public:
  using Error::Error;
};

// Internal arithmetic check failed (for example a parity mismatch).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace crosscap
