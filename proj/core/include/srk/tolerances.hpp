#pragma once

namespace srk::tol {

/// Quaternion norms at or below this are treated as zero for inversion.
inline constexpr double kZeroInversion = 1e-13;

/// Imaginary norm at or below this makes a point real for slice purposes.
inline constexpr double kRealPoint = 1e-10;

/// Relative residual allowed when dividing by a linear or spherical factor.
inline constexpr double kDivisionResidual = 1e-8;

/// Largest imaginary part tolerated in a symmetrized coefficient,
/// relative to the coefficient scale.
inline constexpr double kSymmetrizeReal = 1e-9;

/// Symmetrized denominator values below this (times a degree-dependent
/// scale) mark a quotient evaluation as too close to a pole.
inline constexpr double kNearPole = 1e-10;

/// Residuals within this of zero count as equality cases.
inline constexpr double kEquality = 1e-9;

/// Residuals above this count as strict inequality.
inline constexpr double kStrictMargin = 1e-6;

/// Residuals below minus this are reported as violations.
inline constexpr double kViolation = 1e-9;

/// Distance below which an evaluated point counts as a fixed point.
inline constexpr double kFixedPoint = 1e-10;

/// Coefficient norm below which the fixed-point polynomial is identically
/// zero and the transformation is the identity.
inline constexpr double kIdentityCoeff = 1e-12;

/// Step for central finite differences of the real differential.
inline constexpr double kFdStep = 1e-5;

/// Tolerance for finite-difference comparisons against exact derivatives.
inline constexpr double kFdTol = 1e-6;

/// Default cap on the degree reachable by series-valued operations.
inline constexpr int kDegreeCapDefault = 64;

}  // namespace srk::tol
