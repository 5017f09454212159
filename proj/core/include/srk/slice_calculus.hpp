#pragma once

#include <array>
#include <functional>
#include <vector>

#include "srk/star_series.hpp"

namespace srk {

/// Restriction of a function to the sphere x0 + y0 S through a point q0:
/// on that sphere f(x0 + I y0) = value + I y0 * derivative.
struct SphericalPair {
  Quaternion value;       ///< spherical value, (f(q0) + f(conj q0)) / 2
  Quaternion derivative;  ///< spherical derivative
  double x0 = 0.0;
  double y0 = 0.0;
};

/// Builds the pair from the two evaluations f(q0) and f(conj q0).
/// Throws RealPoint when q0 is numerically real.
SphericalPair make_spherical_pair(const Quaternion& q0,
                                  const Quaternion& value_at_q0,
                                  const Quaternion& value_at_conj);

SphericalPair spherical_pair(const StarSeries& f, const Quaternion& q0);

/// The regular difference quotient at q0: the unique g with
/// f(q) = f(q0) + (q - q0) * g(q). Evaluating g at q0 gives the slice
/// derivative of f, evaluating at conj(q0) gives the spherical derivative.
StarSeries diff_quotient(const StarSeries& f, const Quaternion& q0);

/// Coefficients c_n of the expansion f(q) = sum_n (q - q0)^(*n) c_n,
/// n = 0..order, with c_n the n-th slice derivative at q0 over n!.
std::vector<Quaternion> taylor_coefficients(const StarSeries& f,
                                            const Quaternion& q0, int order);

/// Reassembles sum_n (q - q0)^(*n) c_n as a series in q.
StarSeries taylor_series(const Quaternion& center,
                         const std::vector<Quaternion>& coeffs);

/// Expansion of f around the sphere through q0 in powers of the real
/// central factor (q - x0)^2 + y0^2. Coefficient 2n multiplies that power
/// alone, coefficient 2n+1 carries an extra (q - q0) on its left.
struct SphericalExpansion {
  Quaternion center;
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<Quaternion> coeffs;  ///< A_0, A_1, ..., A_(2 order + 1)
};

/// Computes the expansion by alternating difference quotients at q0 and
/// conj(q0). Throws RealPoint for a real center.
SphericalExpansion spherical_expansion(const StarSeries& f,
                                       const Quaternion& q0, int order);

Quaternion eval_spherical_expansion(const SphericalExpansion& e,
                                    const Quaternion& q);

/// The distance adapted to slice regular functions: |q - p| when q and p
/// share a complex slice, otherwise the larger value
/// sqrt((Re q - Re p)^2 + (|Im q| + |Im p|)^2).
double sigma_distance(const Quaternion& q, const Quaternion& p);

/// Central finite differences of f along the axes 1, i, j, k.
std::array<Quaternion, 4> numeric_differential(
    const std::function<Quaternion(const Quaternion&)>& f,
    const Quaternion& q0, double step = tol::kFdStep);

}  // namespace srk
