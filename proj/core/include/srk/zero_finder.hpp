#pragma once

#include "srk/star_series.hpp"

namespace srk {

/// One sphere of the zero set of a series. A slice regular polynomial has
/// at most one zero on each sphere x0 + y0 S unless the whole sphere is
/// in the zero set. y0 == 0 describes a real point.
struct ZeroSphere {
  double x0 = 0.0;
  double y0 = 0.0;
  /// Multiplicity of the sphere as a root of the symmetrization, halved,
  /// so a simple point zero and a plain spherical zero both report 1.
  int multiplicity = 0;
  bool whole_sphere = false;
  /// The single zero on the sphere when whole_sphere is false.
  Quaternion point;
  /// |f(point)| after refinement, as a quality certificate.
  double residual = 0.0;
};

/// Zero set of f inside the closed ball of the given radius, one entry
/// per sphere, sorted by distance from the origin. Roots the
/// symmetrization via its companion matrix, classifies each sphere with
/// the spherical value and derivative of f, and polishes isolated zeros
/// with Newton steps. Throws ZeroFunction for the zero series.
std::vector<ZeroSphere> locate_zeros(
    const StarSeries& f,
    double max_norm = StarSeries::kInfiniteRadius);

/// Distance from q to the sphere x0 + y0 S.
double sphere_distance(const Quaternion& q, double x0, double y0);

}  // namespace srk
