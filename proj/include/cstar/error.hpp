#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two elements or matrices do not live in the same entry algebra
// (different block size, different interval or grid, mixed instance types).
struct IncompatibleOperands : Error {
  using Error::Error;
};

// An element violates its own structural invariants.
struct InvalidElement : Error {
  using Error::Error;
};

// An iterative routine failed to converge within its budget.
struct NumericFailure : Error {
  using Error::Error;
};

// A requested spectral interval is empty or reversed.
struct InvalidInterval : Error {
  using Error::Error;
};

// A caller-side precondition does not hold (non-Hermitian input, ...).
struct PreconditionViolation : Error {
  using Error::Error;
};

// Adaptive interpolation did not reach the requested tolerance.
struct ApproximationFailure : Error {
  using Error::Error;
};

// The function has a singularity on or inside the requested region.
struct RegionViolation : Error {
  using Error::Error;
};

// An enclosure radius is not strictly larger than the matrix radius,
// or a power series is used beyond its radius of convergence.
struct InvalidRadius : Error {
  using Error::Error;
};

// Unrecognized demo identifier.
struct UnknownExample : Error {
  using Error::Error;
};

// Filesystem failure while writing a report.
struct IoFailure : Error {
  using Error::Error;
};

}  // namespace cstar
