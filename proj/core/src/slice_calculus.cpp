#include "srk/slice_calculus.hpp"

namespace srk {

SphericalPair make_spherical_pair(const Quaternion& q0,
                                  const Quaternion& value_at_q0,
                                  const Quaternion& value_at_conj) {
  const SliceCoordinates c = slice_decompose(q0);
  const Quaternion diff = value_at_q0 - value_at_conj;
  const Quaternion two_imag = q0 - conj(q0);
  return {(value_at_q0 + value_at_conj) * 0.5, qinv(two_imag) * diff, c.x0,
          c.y0};
}

SphericalPair spherical_pair(const StarSeries& f, const Quaternion& q0) {
  return make_spherical_pair(q0, eval(f, q0), eval(f, conj(q0)));
}

StarSeries diff_quotient(const StarSeries& f, const Quaternion& q0) {
  return divide_linear(f - StarSeries::constant(eval(f, q0)), q0);
}

std::vector<Quaternion> taylor_coefficients(const StarSeries& f,
                                            const Quaternion& q0, int order) {
  std::vector<Quaternion> coeffs;
  coeffs.reserve(static_cast<size_t>(order) + 1);
  StarSeries g = f;
  double factorial = 1.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      g = cullen_derivative(g);
      factorial *= n;
    }
    coeffs.push_back(eval(g, q0) / factorial);
  }
  return coeffs;
}

StarSeries taylor_series(const Quaternion& center,
                         const std::vector<Quaternion>& coeffs) {
  const StarSeries shift = StarSeries::linear(center);
  StarSeries acc;
  for (size_t n = coeffs.size(); n-- > 0;) {
    acc = star_mul(shift, acc) + StarSeries::constant(coeffs[n]);
  }
  return acc;
}

SphericalExpansion spherical_expansion(const StarSeries& f,
                                       const Quaternion& q0, int order) {
  const SliceCoordinates c = slice_decompose(q0);
  SphericalExpansion e{q0, c.x0, c.y0, {}};
  e.coeffs.reserve(2 * (static_cast<size_t>(order) + 1));
  StarSeries g = f;
  for (int n = 0; n <= order; ++n) {
    e.coeffs.push_back(eval(g, q0));
    const StarSeries h = diff_quotient(g, q0);
    e.coeffs.push_back(eval(h, conj(q0)));
    if (n < order) g = diff_quotient(h, conj(q0));
  }
  return e;
}

Quaternion eval_spherical_expansion(const SphericalExpansion& e,
                                    const Quaternion& q) {
  const Quaternion shifted = q - Quaternion(e.x0);
  const Quaternion sphere = shifted * shifted + Quaternion(e.y0 * e.y0);
  const Quaternion linear = q - e.center;
  Quaternion acc = Quaternion::zero();
  Quaternion power = Quaternion::one();
  for (size_t n = 0; 2 * n < e.coeffs.size(); ++n) {
    Quaternion term = e.coeffs[2 * n];
    if (2 * n + 1 < e.coeffs.size()) {
      term += linear * e.coeffs[2 * n + 1];
    }
    acc += power * term;
    power = power * sphere;
  }
  return acc;
}

double sigma_distance(const Quaternion& q, const Quaternion& p) {
  if (same_slice(q, p)) {
    return norm(q - p);
  }
  const double dx = real(q) - real(p);
  const double dy = imag_norm(q) + imag_norm(p);
  return std::sqrt(dx * dx + dy * dy);
}

std::array<Quaternion, 4> numeric_differential(
    const std::function<Quaternion(const Quaternion&)>& f,
    const Quaternion& q0, double step) {
  const std::array<Quaternion, 4> axes = {
      Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  std::array<Quaternion, 4> out;
  for (size_t n = 0; n < axes.size(); ++n) {
    const Quaternion h = axes[n] * step;
    out[n] = (f(q0 + h) - f(q0 - h)) / (2.0 * step);
  }
  return out;
}

}  // namespace srk
