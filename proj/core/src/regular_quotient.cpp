#include "srk/regular_quotient.hpp"

#include <algorithm>
#include <utility>

namespace srk {

namespace {

// Checks the pole guard |denom_symm(q)| > threshold and reports the
// nearest excluded sphere on failure.
Quaternion symm_value_checked(const RegularQuotient& Q, const Quaternion& q) {
  const Quaternion s = eval(Q.denom_symmetrization(), q);
  const double threshold =
      tol::kNearPole * eval_scale(Q.denom_symmetrization(), norm(q));
  if (norm(s) < threshold) {
    double best = std::numeric_limits<double>::infinity();
    double x0 = 0.0;
    double y0 = 0.0;
    for (const ZeroSphere& z : Q.excluded_spheres()) {
      const double d = sphere_distance(q, z.x0, z.y0);
      if (d < best) {
        best = d;
        x0 = z.x0;
        y0 = z.y0;
      }
    }
    throw NearPole("quotient evaluated at distance " + format_real(best) +
                       " from the excluded sphere " + format_real(x0) + " + " +
                       format_real(y0) + " S",
                   x0, y0, best);
  }
  return s;
}

}  // namespace

RegularQuotient::RegularQuotient(QuotientSide side, StarSeries denom,
                                 StarSeries numer)
    : side_(side), denom_(std::move(denom)), numer_(std::move(numer)) {
  if (denom_.is_zero()) {
    throw ZeroFunction("quotient with zero denominator");
  }
  denom_real_ = denom_.has_real_coeffs(tol::kSymmetrizeReal);
  if (denom_real_) {
    denom_conj_ = denom_;
    denom_symm_ = denom_;
    combined_ = numer_;
  } else {
    denom_conj_ = conjugate(denom_);
    denom_symm_ = symmetrize(denom_);
    combined_ = side_ == QuotientSide::left ? star_mul(denom_conj_, numer_)
                                            : star_mul(numer_, denom_conj_);
  }
  excluded_ = locate_zeros(denom_);
}

RegularQuotient RegularQuotient::from_series(StarSeries f) {
  return RegularQuotient(QuotientSide::left,
                         StarSeries::constant(Quaternion::one()), std::move(f));
}

double RegularQuotient::nominal_radius() const {
  return std::min(denom_.nominal_radius(), numer_.nominal_radius());
}

Quaternion eval_quotient(const RegularQuotient& Q, const Quaternion& q) {
  const Quaternion s = symm_value_checked(Q, q);
  return qinv(s) * eval(Q.combined(), q);
}

Quaternion T_transform(const StarSeries& f, const Quaternion& q) {
  const Quaternion v = eval(conjugate(f), q);
  return qinv(v) * q * v;
}

Quaternion eval_via_transform(const RegularQuotient& Q, const Quaternion& q) {
  symm_value_checked(Q, q);
  if (Q.side() == QuotientSide::left) {
    const Quaternion v = eval(Q.denom_conjugate(), q);
    const Quaternion t = qinv(v) * q * v;
    return qinv(eval(Q.denom(), t)) * eval(Q.numer(), t);
  }
  const Quaternion v = eval(Q.numer(), q);
  if (norm(v) <= tol::kZeroInversion) return Quaternion::zero();
  const Quaternion p = qinv(v) * q * v;
  if (Q.denom_is_real()) return v * qinv(eval(Q.denom(), p));
  return v * (qinv(eval(Q.denom_symmetrization(), p)) *
              eval(Q.denom_conjugate(), p));
}

RegularQuotient reciprocal(StarSeries f) {
  return RegularQuotient(QuotientSide::left, std::move(f),
                         StarSeries::constant(Quaternion::one()));
}

RegularQuotient reciprocal(const RegularQuotient& Q) {
  if (Q.numer().is_zero()) {
    throw ZeroFunction("reciprocal of the zero quotient");
  }
  return RegularQuotient(Q.side(), Q.numer(), Q.denom());
}

RegularQuotient quotient_symmetrize(const RegularQuotient& Q) {
  return RegularQuotient(QuotientSide::left, symmetrize(Q.denom()),
                         symmetrize(Q.numer()));
}

RegularQuotient quotient_conjugate(const RegularQuotient& Q) {
  const QuotientSide flipped = Q.side() == QuotientSide::left
                                   ? QuotientSide::right
                                   : QuotientSide::left;
  return RegularQuotient(flipped, Q.denom_conjugate(), conjugate(Q.numer()));
}

RegularQuotient canonical(const RegularQuotient& Q) {
  if (Q.side() == QuotientSide::left && Q.denom_is_real()) {
    return Q;
  }
  return RegularQuotient(QuotientSide::left, Q.denom_symmetrization(),
                         Q.combined());
}

RegularQuotient star_mul(const RegularQuotient& A, const RegularQuotient& B) {
  const RegularQuotient a = canonical(A);
  const RegularQuotient b = canonical(B);
  return RegularQuotient(QuotientSide::left, star_mul(a.denom(), b.denom()),
                         star_mul(a.numer(), b.numer()));
}

RegularQuotient add(const RegularQuotient& A, const RegularQuotient& B) {
  const RegularQuotient a = canonical(A);
  const RegularQuotient b = canonical(B);
  return RegularQuotient(QuotientSide::left, star_mul(a.denom(), b.denom()),
                         star_mul(b.denom(), a.numer()) +
                             star_mul(a.denom(), b.numer()));
}

RegularQuotient sub(const RegularQuotient& A, const RegularQuotient& B) {
  const RegularQuotient a = canonical(A);
  const RegularQuotient b = canonical(B);
  return RegularQuotient(QuotientSide::left, star_mul(a.denom(), b.denom()),
                         star_mul(b.denom(), a.numer()) -
                             star_mul(a.denom(), b.numer()));
}

RegularQuotient add_const(const RegularQuotient& Q, const Quaternion& c) {
  const RegularQuotient a = canonical(Q);
  return RegularQuotient(QuotientSide::left, a.denom(),
                         a.numer() + scale_right(a.denom(), c));
}

RegularQuotient sub_const(const RegularQuotient& Q, const Quaternion& c) {
  return add_const(Q, -c);
}

RegularQuotient const_mul_left(const Quaternion& c, const RegularQuotient& Q) {
  const RegularQuotient a = canonical(Q);
  return RegularQuotient(QuotientSide::left, a.denom(),
                         scale_left(c, a.numer()));
}

RegularQuotient const_mul_right(const RegularQuotient& Q, const Quaternion& c) {
  const RegularQuotient a = canonical(Q);
  return RegularQuotient(QuotientSide::left, a.denom(),
                         scale_right(a.numer(), c));
}

RegularQuotient diff_quotient(const RegularQuotient& Q, const Quaternion& q0) {
  const RegularQuotient a = canonical(Q);
  const Quaternion value = eval_quotient(a, q0);
  const StarSeries shifted = a.numer() - scale_right(a.denom(), value);
  return RegularQuotient(QuotientSide::left, a.denom(),
                         divide_linear(shifted, q0));
}

RegularQuotient cullen_derivative(const RegularQuotient& Q) {
  const RegularQuotient a = canonical(Q);
  const StarSeries& S = a.denom();
  const StarSeries& P = a.numer();
  return RegularQuotient(
      QuotientSide::left, star_mul(S, S),
      star_mul(S, cullen_derivative(P)) - star_mul(cullen_derivative(S), P));
}

SphericalPair spherical_pair(const RegularQuotient& Q, const Quaternion& q0) {
  return make_spherical_pair(q0, eval_quotient(Q, q0),
                             eval_quotient(Q, conj(q0)));
}

Quaternion eval_symmetrization(const RegularQuotient& Q, const Quaternion& q) {
  const Quaternion s = symm_value_checked(Q, q);
  const Quaternion denom_sym = Q.denom_is_real() ? s * s : s;
  return qinv(denom_sym) * eval(symmetrize(Q.numer()), q);
}

}  // namespace srk
