#pragma once

#include "srk/slice_calculus.hpp"
#include "srk/star_series.hpp"
#include "srk/zero_finder.hpp"

namespace srk {

enum class QuotientSide { left, right };

/// A regular quotient of slice regular polynomials. With denominator f
/// and numerator g this is f^{-*} * g on the left side and g * f^{-*} on
/// the right side, where ^{-*} is the inverse for the *-product. The
/// quotient is defined away from the zero spheres of the symmetrized
/// denominator, which are located eagerly at construction.
class RegularQuotient {
 public:
  /// Throws ZeroFunction when the denominator is the zero series.
  RegularQuotient(QuotientSide side, StarSeries denom, StarSeries numer);

  /// Wraps a polynomial as a quotient with denominator 1.
  static RegularQuotient from_series(StarSeries f);

  QuotientSide side() const { return side_; }
  const StarSeries& denom() const { return denom_; }
  const StarSeries& numer() const { return numer_; }
  const StarSeries& denom_conjugate() const { return denom_conj_; }
  /// For a real central denominator this is the denominator itself, so
  /// composite quotients never square what is already real; otherwise it
  /// is the symmetrized denominator. Its zero spheres are the excluded
  /// spheres either way.
  const StarSeries& denom_symmetrization() const { return denom_symm_; }
  /// denom_conjugate * numer on the left side, numer * denom_conjugate on
  /// the right side (just numer for a real central denominator); the
  /// quotient value is denom_symmetrization(q)^{-1} times this series at q.
  const StarSeries& combined() const { return combined_; }
  const std::vector<ZeroSphere>& excluded_spheres() const { return excluded_; }
  double nominal_radius() const;
  bool denom_is_real() const { return denom_real_; }

 private:
  QuotientSide side_;
  StarSeries denom_;
  StarSeries numer_;
  StarSeries denom_conj_;
  StarSeries denom_symm_;
  StarSeries combined_;
  std::vector<ZeroSphere> excluded_;
  bool denom_real_ = false;
};

/// Evaluates the quotient by the symmetrized formula
/// denom_symmetrization(q)^{-1} * combined(q). Throws NearPole when the
/// symmetrized denominator is negligible at q, reporting the nearest
/// excluded sphere.
Quaternion eval_quotient(const RegularQuotient& Q, const Quaternion& q);

/// The sphere-preserving conjugation q -> f^c(q)^{-1} q f^c(q) attached
/// to a denominator f. Its inverse is the transform attached to f^c.
/// Throws ZeroDivision when f^c vanishes at q.
Quaternion T_transform(const StarSeries& f, const Quaternion& q);

/// Evaluates the quotient by its second route. On the left side this is
/// denom(T(q))^{-1} * numer(T(q)) with T the transform of the
/// denominator. On the right side it uses the product evaluation
/// identity: with v = numer(q), the value is 0 when v = 0 and otherwise
/// v times the reciprocal of the denominator at v^{-1} q v.
Quaternion eval_via_transform(const RegularQuotient& Q, const Quaternion& q);

/// f^{-*} as a left quotient with numerator 1.
RegularQuotient reciprocal(StarSeries f);
/// Swaps numerator and denominator; throws ZeroFunction when the
/// numerator is zero.
RegularQuotient reciprocal(const RegularQuotient& Q);

/// Symmetrization of the quotient as a left quotient of the two
/// symmetrized parts, which has real central numerator and denominator.
RegularQuotient quotient_symmetrize(const RegularQuotient& Q);

/// Regular conjugate; the side flips.
RegularQuotient quotient_conjugate(const RegularQuotient& Q);

/// Rewrites any quotient as a left quotient with real central
/// denominator: denominator becomes denom_symmetrization, numerator
/// becomes combined. All arithmetic below works on this form.
RegularQuotient canonical(const RegularQuotient& Q);

RegularQuotient star_mul(const RegularQuotient& A, const RegularQuotient& B);
RegularQuotient add(const RegularQuotient& A, const RegularQuotient& B);
RegularQuotient sub(const RegularQuotient& A, const RegularQuotient& B);
RegularQuotient add_const(const RegularQuotient& Q, const Quaternion& c);
RegularQuotient sub_const(const RegularQuotient& Q, const Quaternion& c);
/// constant(c) * Q in the *-algebra.
RegularQuotient const_mul_left(const Quaternion& c, const RegularQuotient& Q);
/// Q * constant(c) in the *-algebra.
RegularQuotient const_mul_right(const RegularQuotient& Q, const Quaternion& c);

/// Regular difference quotient (q - q0)^{-*} * (Q - Q(q0)). On canonical
/// forms the denominator is unchanged, so iterating stays cheap.
RegularQuotient diff_quotient(const RegularQuotient& Q, const Quaternion& q0);

/// Slice derivative by the quotient rule; squares the denominator.
RegularQuotient cullen_derivative(const RegularQuotient& Q);

SphericalPair spherical_pair(const RegularQuotient& Q, const Quaternion& q0);

/// Value of the symmetrized quotient at q.
Quaternion eval_symmetrization(const RegularQuotient& Q, const Quaternion& q);

}  // namespace srk
