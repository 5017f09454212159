#pragma once

#include "srk/regular_quotient.hpp"

namespace srk {

/// A 2x2 quaternionic matrix [[a, c], [b, d]] acting on functions by
/// f -> (f c + d)^{-*} * (f a + b).
struct QuatMatrix2 {
  Quaternion a;  ///< row 0, column 0
  Quaternion c;  ///< row 0, column 1
  Quaternion b;  ///< row 1, column 0
  Quaternion d;  ///< row 1, column 1

  static QuatMatrix2 identity() {
    return {Quaternion::one(), Quaternion::zero(), Quaternion::zero(),
            Quaternion::one()};
  }
  static QuatMatrix2 diagonal(const Quaternion& top, const Quaternion& bottom) {
    return {top, Quaternion::zero(), Quaternion::zero(), bottom};
  }
  /// diag(1, -1), the quadratic form preserved by the group below.
  static QuatMatrix2 signature() {
    return diagonal(Quaternion::one(), -Quaternion::one());
  }
};

QuatMatrix2 matmul(const QuatMatrix2& A, const QuatMatrix2& B);
QuatMatrix2 conj_entries(const QuatMatrix2& A);
QuatMatrix2 transpose(const QuatMatrix2& A);
QuatMatrix2 conj_transpose(const QuatMatrix2& A);

/// Hermitian up to tolerance: a and d real, c the conjugate of b. For
/// such matrices the right action on f agrees with the left action of
/// the transpose.
bool is_hermitian(const QuatMatrix2& A, double tolerance = 1e-10);

bool is_invertible(const QuatMatrix2& A);
/// Throws SingularMatrix.
QuatMatrix2 inverse(const QuatMatrix2& A);

/// Membership in the group of matrices with conj_transpose(A) H A = H
/// for H = signature(). These are exactly the matrices whose fractional
/// transformation maps the unit ball onto itself.
bool in_sp11(const QuatMatrix2& A, double tolerance = 1e-10);

/// [[1, -conj(q0)], [-q0, 1]], normalized by sqrt(1 - |q0|^2) so it lies
/// in the group. Its fractional transformation is the regular Moebius
/// map with center q0 and unit 1.
QuatMatrix2 mobius_matrix(const Quaternion& q0, bool normalized = true);

/// Right action f.A = (f c + d)^{-*} * (f a + b); matrix entries multiply
/// coefficients on the right. Throws SingularMatrix for singular A and
/// DegenerateDenominator when the denominator series vanishes.
RegularQuotient right_action(const StarSeries& f, const QuatMatrix2& A);
RegularQuotient right_action(const RegularQuotient& f, const QuatMatrix2& A);

/// Left action of the transpose, (a f + b) * (c f + d)^{-*}, with matrix
/// entries multiplying coefficients on the left.
RegularQuotient left_action(const QuatMatrix2& A, const StarSeries& f);
RegularQuotient left_action(const QuatMatrix2& A, const RegularQuotient& f);

/// The fractional transformation of A, its right action on the identity.
RegularQuotient regular_fractional(const QuatMatrix2& A);

/// The regular Moebius transformation (q - q0) * (1 - q conj(q0))^{-*} u,
/// a bijection of the open unit ball for |q0| < 1 and |u| = 1.
struct RegularMobius {
  Quaternion q0;
  Quaternion u;
};

/// Validates |q0| < 1 and |u| = 1 (up to 1e-9, then renormalized).
/// Throws OutOfDomain on bad input.
RegularMobius make_regular_mobius(const Quaternion& q0, const Quaternion& u);

/// The transformation as a left quotient with denominator 1 - q conj(q0).
RegularQuotient mobius_quotient(const RegularMobius& M);

/// Evaluation inside the open unit ball; throws OutOfDomain elsewhere.
Quaternion eval_regular_mobius(const RegularMobius& M, const Quaternion& q);

/// The pointwise transformation q -> v (1 - q conj(q0))^{-1} (q - q0) u.
/// Agrees with the regular one on the slice of q0 when v = 1.
struct ClassicalMobius {
  Quaternion v;
  Quaternion q0;
  Quaternion u;
};

Quaternion eval_classical_mobius(const ClassicalMobius& M, const Quaternion& q);

/// The unique regular Moebius transformation with fixed point q0 built
/// from a unit parameter v: center q0 (1 - conj(v)) (1 - q0 conj(v)
/// conj(q0))^{-1} and unit (1 - q0 v conj(q0))^{-1} (v - |q0|^2).
/// v = 1 gives the identity.
RegularMobius mobius_fixing(const Quaternion& q0, const Quaternion& v);

struct FixedPointSet {
  bool identity = false;           ///< every point is fixed
  std::vector<Quaternion> points;  ///< fixed points in the open ball
};

/// Fixed points inside the open unit ball. A non-identity map has at
/// most one; maps whose fixed points sit on the boundary sphere report
/// none.
FixedPointSet fixed_points(const RegularMobius& M);

}  // namespace srk
