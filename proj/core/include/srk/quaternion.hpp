#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <string_view>

#include "srk/errors.hpp"
#include "srk/tolerances.hpp"

namespace srk {

/// A quaternion w + x i + y j + z k over double components.
/// Multiplication is the Hamilton product and is not commutative.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w, double x = 0.0, double y = 0.0, double z = 0.0)
      : w(w), x(x), y(y), z(z) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  bool operator==(const Quaternion&) const = default;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
    return a += b;
  }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
    return a -= b;
  }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) {
    return a *= 1.0 / s;
  }

  /// Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return a * b;
}

constexpr Quaternion conj(const Quaternion& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double real(const Quaternion& q) { return q.w; }

constexpr Quaternion imag(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

inline double imag_norm(const Quaternion& q) {
  return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// Multiplicative inverse. Throws ZeroDivision when |q| is below threshold.
Quaternion qinv(const Quaternion& q);

/// q / |q|. Throws ZeroDivision when |q| is below threshold.
Quaternion unit(const Quaternion& q);

/// Coordinates of q on its complex slice: q = x0 + axis * y0 with y0 > 0,
/// axis a purely imaginary unit.
struct SliceCoordinates {
  double x0 = 0.0;
  double y0 = 0.0;
  Quaternion axis;
};

/// Decomposes q into slice coordinates. Throws RealPoint when the
/// imaginary part is numerically zero and the axis is undefined.
SliceCoordinates slice_decompose(const Quaternion& q);

inline Quaternion from_slice(const SliceCoordinates& c) {
  return Quaternion(c.x0) + c.axis * c.y0;
}

/// True when a and b lie on a common complex slice (their imaginary parts
/// are parallel, or at least one of them is real).
bool same_slice(const Quaternion& a, const Quaternion& b,
                double tolerance = tol::kRealPoint);

/// Formats v with 17 significant digits, enough to round-trip a double.
std::string format_real(double v);

/// Renders q in the text form "w+xi+yj+zk" with 17 significant digits per
/// component. parse_quaternion(to_string(q)) reproduces q bit for bit.
std::string to_string(const Quaternion& q);

/// Parses the text form "w+xi+yj+zk". Components are signed decimals
/// (scientific notation allowed), may appear in any order or be omitted,
/// and a bare unit such as "-i" means coefficient one. Spaces around terms
/// and signs are ignored. Throws ParseError on malformed input.
Quaternion parse_quaternion(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace srk
