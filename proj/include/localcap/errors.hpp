#pragma once

#include <stdexcept>
#include <string>

namespace localcap {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A probe point fell within the guard radius of a transmitter.
/// Samplers should resample the point rather than evaluate the singularity.
struct CoincidentPointError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

/// Invalid parameter or configuration value.
struct ValidationError : Error {
    using Error::Error;
};

struct RegionTooSmallError : Error {
    using Error::Error;
};

struct ResourceLimitError : Error {
    using Error::Error;
};

/// The boundary-distance quadratic has no positive root (beta <= 1).
struct NoPositiveRootError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

/// Contour trace exhausted max_steps without returning to its start.
struct NoClosureError : Error {
    using Error::Error;
};

struct GradientVanishedError : Error {
    using Error::Error;
};

/// Series terms kept growing before the tolerance was met; the partial
/// sum would be garbage for this argument.
struct SeriesDivergingError : Error {
    using Error::Error;
};

/// Too many per-sample traces failed; the estimate was aborted.
struct SimulationFailureError : Error {
    using Error::Error;
};

}  // namespace localcap
