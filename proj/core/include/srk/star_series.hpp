#pragma once

#include <limits>
#include <vector>

#include "srk/quaternion.hpp"

namespace srk {

/// A slice regular function represented by right coefficients,
/// f(q) = sum_n q^n a_n, truncated to a polynomial. The index in the
/// coefficient vector is the power of q.
class StarSeries {
 public:
  static constexpr double kInfiniteRadius =
      std::numeric_limits<double>::infinity();

  /// The zero series.
  StarSeries() = default;

  /// Throws DegreeCapExceeded when coefficients go past the degree cap.
  explicit StarSeries(std::vector<Quaternion> coefficients,
                      double nominal_radius = kInfiniteRadius);

  static StarSeries constant(const Quaternion& c,
                             double nominal_radius = kInfiniteRadius);
  /// The identity map q.
  static StarSeries identity(double nominal_radius = kInfiniteRadius);
  /// The monomial q^n a.
  static StarSeries monomial(int n, const Quaternion& a,
                             double nominal_radius = kInfiniteRadius);
  /// The linear factor q - q0.
  static StarSeries linear(const Quaternion& q0,
                           double nominal_radius = kInfiniteRadius);

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  /// Coefficient of q^n; zero beyond the stored degree.
  Quaternion coeff(int n) const;
  /// Degree of the highest exactly nonzero coefficient, -1 for the zero
  /// series.
  int degree() const;
  double nominal_radius() const { return radius_; }
  bool is_zero() const;
  bool has_real_coeffs(double tolerance) const;
  double max_coeff_norm() const;
  /// Sum of coefficient norms, an upper bound for |f| on the unit ball.
  double coeff_norm_sum() const;

  /// Degree cap shared by all series-valued operations. Changing it is
  /// intended for setup code, not for concurrent use.
  static int degree_cap();
  static void set_degree_cap(int cap);

 private:
  std::vector<Quaternion> coeffs_;
  double radius_ = kInfiniteRadius;
};

/// Pointwise evaluation sum_n q^n a_n. Throws OutOfDomain when |q| is at
/// or beyond the nominal radius of convergence.
Quaternion eval(const StarSeries& f, const Quaternion& q);

/// Crude upper bound for |f| on the ball of radius r, used to scale
/// zero and pole thresholds.
double eval_scale(const StarSeries& f, double r);

StarSeries add(const StarSeries& f, const StarSeries& g);
StarSeries sub(const StarSeries& f, const StarSeries& g);
inline StarSeries operator+(const StarSeries& f, const StarSeries& g) {
  return add(f, g);
}
inline StarSeries operator-(const StarSeries& f, const StarSeries& g) {
  return sub(f, g);
}
StarSeries operator-(const StarSeries& f);

/// The *-product, a convolution of coefficients:
/// (f * g)_n = sum_k f_k g_(n-k). Associative but not commutative.
/// Throws DegreeCapExceeded when the product degree passes the cap.
StarSeries star_mul(const StarSeries& f, const StarSeries& g);
inline StarSeries operator*(const StarSeries& f, const StarSeries& g) {
  return star_mul(f, g);
}

/// f^(*n). star_pow(f, 0) is the constant 1.
StarSeries star_pow(const StarSeries& f, int n);

/// f * constant(c), which multiplies every coefficient by c on the right.
StarSeries scale_right(const StarSeries& f, const Quaternion& c);
/// constant(c) * f, which multiplies every coefficient by c on the left.
StarSeries scale_left(const Quaternion& c, const StarSeries& f);

/// Regular conjugate: coefficients replaced by their conjugates.
StarSeries conjugate(const StarSeries& f);

/// Symmetrization f * conjugate(f). Its coefficients are real; any
/// imaginary residue above tolerance (relative to the coefficient scale)
/// raises NotReal, smaller residue is zeroed out.
StarSeries symmetrize(const StarSeries& f);

/// Termwise slice derivative: coefficient of q^n becomes (n+1) a_(n+1).
StarSeries cullen_derivative(const StarSeries& f);

/// Quotient of the exact division f = (q - q0) * g, computed by a
/// backward recurrence from the top coefficient. Throws ResidualTooLarge
/// when the remainder exceeds tolerance relative to the coefficient
/// scale, i.e. when f(q0) is not numerically zero.
StarSeries divide_linear(const StarSeries& f, const Quaternion& q0);

/// The real central polynomial q^2 - 2 x0 q + (x0^2 + y0^2), which
/// vanishes exactly on the sphere x0 + y0 S.
StarSeries sphere_polynomial(double x0, double y0);

struct SphereDivision {
  StarSeries quotient;
  Quaternion remainder0;  ///< constant term of the linear remainder
  Quaternion remainder1;  ///< linear term of the remainder
};

/// Long division of f by sphere_polynomial(x0, y0), returning the
/// quotient and the linear remainder.
SphereDivision divide_sphere(const StarSeries& f, double x0, double y0);

}  // namespace srk
