#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Out-of-range angle, non-positive spread, odd grid size and similar.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Grid too small for the support of a position-space state.
class AliasingError : public Error {
 public:
  using Error::Error;
};

/// Reduced density with a determinant or trace outside the round-off band.
class InvalidDensityError : public Error {
 public:
  using Error::Error;
};

/// Input that does not satisfy an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Quadrature disagrees with a closed form beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
