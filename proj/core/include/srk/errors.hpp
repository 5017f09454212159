#pragma once

#include <stdexcept>
#include <string>

namespace srk {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inversion or normalization of a quaternion with norm below threshold.
struct ZeroDivision : Error {
  using Error::Error;
};

/// Slice decomposition requested at a point with (numerically) zero
/// imaginary part, where the imaginary unit of the slice is undefined.
struct RealPoint : Error {
  using Error::Error;
};

/// Evaluation outside the declared domain of convergence or the unit ball.
struct OutOfDomain : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// Symmetrization produced coefficients with non-negligible imaginary part.
struct NotReal : Error {
  using Error::Error;
};

/// A synthetic division left a residual above tolerance, meaning the
/// dividend does not actually vanish where the divisor does.
struct ResidualTooLarge : Error {
  using Error::Error;
};

/// An operation would grow a series beyond the configured degree cap.
struct DegreeCapExceeded : Error {
  using Error::Error;
};

/// Quotient evaluation at a point too close to an excluded sphere.
struct NearPole : Error {
  NearPole(const std::string& msg, double x0, double y0, double distance)
      : Error(msg), sphere_x0(x0), sphere_y0(y0), distance(distance) {}
  double sphere_x0;  ///< real center of the nearest excluded sphere
  double sphere_y0;  ///< imaginary radius of that sphere (0 for a real point)
  double distance;   ///< distance from the query point to the sphere
};

/// An operation that needs a nonzero function received the zero series.
struct ZeroFunction : Error {
  using Error::Error;
};

/// A 2x2 quaternionic matrix with no inverse.
struct SingularMatrix : Error {
  using Error::Error;
};

/// A fractional transformation whose denominator row is identically zero.
struct DegenerateDenominator : Error {
  using Error::Error;
};

/// A hypothesis of the requested bound does not hold for the given input.
struct PreconditionFailed : Error {
  using Error::Error;
};

/// The spherical difference quotient of the transformed map is undefined
/// because the symmetrized value at the base point equals 1.
struct DegenerateSymmetrization : Error {
  using Error::Error;
};

/// Rigidity probe observed a mix of outcomes that the classification
/// theorem rules out (some identity conditions pass while others fail).
struct InconsistentConditions : Error {
  using Error::Error;
};

}  // namespace srk
