#include "srk/mobius.hpp"

#include <complex>

#include <Eigen/Dense>

namespace srk {

QuatMatrix2 matmul(const QuatMatrix2& A, const QuatMatrix2& B) {
  return {A.a * B.a + A.c * B.b, A.a * B.c + A.c * B.d,
          A.b * B.a + A.d * B.b, A.b * B.c + A.d * B.d};
}

QuatMatrix2 conj_entries(const QuatMatrix2& A) {
  return {conj(A.a), conj(A.c), conj(A.b), conj(A.d)};
}

QuatMatrix2 transpose(const QuatMatrix2& A) { return {A.a, A.b, A.c, A.d}; }

QuatMatrix2 conj_transpose(const QuatMatrix2& A) {
  return transpose(conj_entries(A));
}

namespace {

double entry_scale(const QuatMatrix2& A) {
  return std::max(std::max(norm(A.a), norm(A.c)),
                  std::max(norm(A.b), norm(A.d)));
}

// q = alpha + beta j with complex alpha, beta embeds as the 2x2 complex
// block [[alpha, beta], [-conj(beta), conj(alpha)]].
void put_block(Eigen::Matrix4cd& M, int row, int col, const Quaternion& q) {
  const std::complex<double> alpha(q.w, q.x);
  const std::complex<double> beta(q.y, q.z);
  M(2 * row, 2 * col) = alpha;
  M(2 * row, 2 * col + 1) = beta;
  M(2 * row + 1, 2 * col) = -std::conj(beta);
  M(2 * row + 1, 2 * col + 1) = std::conj(alpha);
}

Quaternion get_block(const Eigen::Matrix4cd& M, int row, int col) {
  const std::complex<double> alpha = M(2 * row, 2 * col);
  const std::complex<double> beta = M(2 * row, 2 * col + 1);
  return {alpha.real(), alpha.imag(), beta.real(), beta.imag()};
}

Eigen::Matrix4cd embed(const QuatMatrix2& A) {
  Eigen::Matrix4cd M;
  put_block(M, 0, 0, A.a);
  put_block(M, 0, 1, A.c);
  put_block(M, 1, 0, A.b);
  put_block(M, 1, 1, A.d);
  return M;
}

}  // namespace

bool is_hermitian(const QuatMatrix2& A, double tolerance) {
  const double scale = 1.0 + entry_scale(A);
  return imag_norm(A.a) <= tolerance * scale &&
         imag_norm(A.d) <= tolerance * scale &&
         norm(A.c - conj(A.b)) <= tolerance * scale;
}

bool is_invertible(const QuatMatrix2& A) {
  return Eigen::FullPivLU<Eigen::Matrix4cd>(embed(A)).isInvertible();
}

QuatMatrix2 inverse(const QuatMatrix2& A) {
  const Eigen::FullPivLU<Eigen::Matrix4cd> lu(embed(A));
  if (!lu.isInvertible()) {
    throw SingularMatrix("matrix has no inverse");
  }
  const Eigen::Matrix4cd inv = lu.inverse();
  return {get_block(inv, 0, 0), get_block(inv, 0, 1), get_block(inv, 1, 0),
          get_block(inv, 1, 1)};
}

bool in_sp11(const QuatMatrix2& A, double tolerance) {
  const QuatMatrix2 H = QuatMatrix2::signature();
  const QuatMatrix2 G = matmul(matmul(conj_transpose(A), H), A);
  const double scale = 1.0 + entry_scale(A) * entry_scale(A);
  return norm(G.a - H.a) <= tolerance * scale &&
         norm(G.c - H.c) <= tolerance * scale &&
         norm(G.b - H.b) <= tolerance * scale &&
         norm(G.d - H.d) <= tolerance * scale;
}

QuatMatrix2 mobius_matrix(const Quaternion& q0, bool normalized) {
  if (norm(q0) >= 1.0) {
    throw OutOfDomain("Moebius center must lie in the open unit ball");
  }
  QuatMatrix2 C{Quaternion::one(), -conj(q0), -q0, Quaternion::one()};
  if (normalized) {
    const double s = 1.0 / std::sqrt(1.0 - norm_sq(q0));
    C.a *= s;
    C.c *= s;
    C.b *= s;
    C.d *= s;
  }
  return C;
}

namespace {

RegularQuotient action_quotient(QuotientSide side, StarSeries denom,
                                StarSeries numer, const QuatMatrix2& A) {
  if (!is_invertible(A)) {
    throw SingularMatrix("action of a singular matrix");
  }
  if (denom.is_zero()) {
    throw DegenerateDenominator("action denominator vanishes identically");
  }
  return RegularQuotient(side, std::move(denom), std::move(numer));
}

}  // namespace

RegularQuotient right_action(const StarSeries& f, const QuatMatrix2& A) {
  return action_quotient(
      QuotientSide::left,
      scale_right(f, A.c) + StarSeries::constant(A.d, f.nominal_radius()),
      scale_right(f, A.a) + StarSeries::constant(A.b, f.nominal_radius()), A);
}

RegularQuotient right_action(const RegularQuotient& f, const QuatMatrix2& A) {
  const RegularQuotient g = canonical(f);
  return action_quotient(
      QuotientSide::left,
      scale_right(g.numer(), A.c) + scale_right(g.denom(), A.d),
      scale_right(g.numer(), A.a) + scale_right(g.denom(), A.b), A);
}

RegularQuotient left_action(const QuatMatrix2& A, const StarSeries& f) {
  return action_quotient(
      QuotientSide::right,
      scale_left(A.c, f) + StarSeries::constant(A.d, f.nominal_radius()),
      scale_left(A.a, f) + StarSeries::constant(A.b, f.nominal_radius()), A);
}

RegularQuotient left_action(const QuatMatrix2& A, const RegularQuotient& f) {
  const RegularQuotient g = canonical(f);
  return action_quotient(
      QuotientSide::right,
      scale_left(A.c, g.numer()) + scale_right(g.denom(), A.d),
      scale_left(A.a, g.numer()) + scale_right(g.denom(), A.b), A);
}

RegularQuotient regular_fractional(const QuatMatrix2& A) {
  return right_action(StarSeries::identity(), A);
}

RegularMobius make_regular_mobius(const Quaternion& q0, const Quaternion& u) {
  if (norm(q0) >= 1.0) {
    throw OutOfDomain("Moebius center must lie in the open unit ball");
  }
  if (std::abs(norm(u) - 1.0) > 1e-9) {
    throw OutOfDomain("Moebius unit must have norm 1");
  }
  return {q0, unit(u)};
}

RegularQuotient mobius_quotient(const RegularMobius& M) {
  const StarSeries denom({Quaternion::one(), -conj(M.q0)});
  const StarSeries numer({-M.q0 * M.u, M.u});
  return RegularQuotient(QuotientSide::left, denom, numer);
}

Quaternion eval_regular_mobius(const RegularMobius& M, const Quaternion& q) {
  if (norm(q) >= 1.0) {
    throw OutOfDomain("Moebius transformations act on the open unit ball");
  }
  return eval_quotient(mobius_quotient(M), q);
}

Quaternion eval_classical_mobius(const ClassicalMobius& M,
                                 const Quaternion& q) {
  if (norm(q) >= 1.0) {
    throw OutOfDomain("Moebius transformations act on the open unit ball");
  }
  return M.v * qinv(Quaternion::one() - q * conj(M.q0)) * (q - M.q0) * M.u;
}

RegularMobius mobius_fixing(const Quaternion& q0, const Quaternion& v) {
  if (norm(q0) >= 1.0) {
    throw OutOfDomain("fixed point must lie in the open unit ball");
  }
  if (std::abs(norm(v) - 1.0) > 1e-9) {
    throw OutOfDomain("rotation parameter must have norm 1");
  }
  const Quaternion one = Quaternion::one();
  const Quaternion u = qinv(one - q0 * v * conj(q0)) * (v - Quaternion(norm_sq(q0)));
  const Quaternion a = q0 * (one - conj(v)) * qinv(one - q0 * conj(v) * conj(q0));
  return make_regular_mobius(a, u);
}

FixedPointSet fixed_points(const RegularMobius& M) {
  const Quaternion a = M.q0;
  const Quaternion u = M.u;
  // Numerator of M - id over the left denominator (1 - q conj(a)).
  const StarSeries P({-(a * u), u - Quaternion::one(), conj(a)});
  FixedPointSet out;
  if (P.is_zero() || P.max_coeff_norm() < tol::kIdentityCoeff) {
    out.identity = true;
    return out;
  }
  // A left quotient vanishes where conjugate(denominator) * numerator
  // does, not where the raw numerator does.
  const StarSeries combined =
      star_mul(StarSeries({Quaternion::one(), -a}), P);
  // Fixed points on the boundary sphere are excluded; only interior ones
  // are reported, with a margin covering boundary roundoff.
  for (const ZeroSphere& z : locate_zeros(combined, 1.0)) {
    if (!z.whole_sphere && norm(z.point) < 1.0 - 1e-8) {
      out.points.push_back(z.point);
    }
  }
  return out;
}

}  // namespace srk
