#pragma once

#include <stdexcept>
#include <string>

namespace dwell {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A PotentialSpec / SolverConfig / BoxConfig violates its invariants.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// Inner turning point requested for a barrier-free potential (beta = 0).
class NoBarrierError : public Error {
 public:
  using Error::Error;
};

// Energy below the potential minimum: no classical turning points exist.
class EnergyBelowMinimumError : public Error {
 public:
  using Error::Error;
};

// alpha = 0 makes the trace cubic degenerate (gamma = 0 is not a basis scale).
class DegenerateCubicError : public Error {
 public:
  using Error::Error;
};

// Symmetric eigendecomposition did not converge.
class EigensolverError : public Error {
 public:
  using Error::Error;
};

// Richardson refinement hit the cap; carries the last two panel-doubling
// estimates so the caller can judge how bad it is.
class NonConvergentError : public Error {
 public:
  NonConvergentError(const std::string& what, double last, double previous)
      : Error(what), last_estimate(last), previous_estimate(previous) {}
  double last_estimate;
  double previous_estimate;
};

// Closed forms exist only for n <= 3.
class UnsupportedStateError : public Error {
 public:
  using Error::Error;
};

// Too few grid points for a finite-difference derivative.
class GridTooCoarseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dwell
