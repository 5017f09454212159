#include "srk/star_series.hpp"

#include <algorithm>
#include <utility>

namespace srk {

namespace {

int g_degree_cap = tol::kDegreeCapDefault;

void trim(std::vector<Quaternion>& coeffs) {
  while (!coeffs.empty() && norm_sq(coeffs.back()) == 0.0) {
    coeffs.pop_back();
  }
}

void check_cap(int degree) {
  if (degree > g_degree_cap) {
    throw DegreeCapExceeded("series degree " + std::to_string(degree) +
                            " exceeds cap " + std::to_string(g_degree_cap));
  }
}

}  // namespace

StarSeries::StarSeries(std::vector<Quaternion> coefficients,
                       double nominal_radius)
    : coeffs_(std::move(coefficients)), radius_(nominal_radius) {
  trim(coeffs_);
  check_cap(static_cast<int>(coeffs_.size()) - 1);
}

StarSeries StarSeries::constant(const Quaternion& c, double nominal_radius) {
  return StarSeries({c}, nominal_radius);
}

StarSeries StarSeries::identity(double nominal_radius) {
  return StarSeries({Quaternion::zero(), Quaternion::one()}, nominal_radius);
}

StarSeries StarSeries::monomial(int n, const Quaternion& a,
                                double nominal_radius) {
  std::vector<Quaternion> coeffs(static_cast<size_t>(n) + 1);
  coeffs.back() = a;
  return StarSeries(std::move(coeffs), nominal_radius);
}

StarSeries StarSeries::linear(const Quaternion& q0, double nominal_radius) {
  return StarSeries({-q0, Quaternion::one()}, nominal_radius);
}

Quaternion StarSeries::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) {
    return Quaternion::zero();
  }
  return coeffs_[static_cast<size_t>(n)];
}

int StarSeries::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool StarSeries::is_zero() const { return coeffs_.empty(); }

bool StarSeries::has_real_coeffs(double tolerance) const {
  const double scale = 1.0 + max_coeff_norm();
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Quaternion& c) {
    return imag_norm(c) <= tolerance * scale;
  });
}

double StarSeries::max_coeff_norm() const {
  double m = 0.0;
  for (const Quaternion& c : coeffs_) m = std::max(m, norm(c));
  return m;
}

double StarSeries::coeff_norm_sum() const {
  double s = 0.0;
  for (const Quaternion& c : coeffs_) s += norm(c);
  return s;
}

int StarSeries::degree_cap() { return g_degree_cap; }

void StarSeries::set_degree_cap(int cap) { g_degree_cap = cap; }

Quaternion eval(const StarSeries& f, const Quaternion& q) {
  if (norm(q) >= f.nominal_radius()) {
    throw OutOfDomain("evaluation at |q| = " + format_real(norm(q)) +
                      " outside radius " + format_real(f.nominal_radius()));
  }
  const auto& a = f.coeffs();
  Quaternion acc = Quaternion::zero();
  for (size_t n = a.size(); n-- > 0;) {
    acc = a[n] + q * acc;
  }
  return acc;
}

double eval_scale(const StarSeries& f, double r) {
  const double growth = std::pow(std::max(1.0, r), std::max(0, f.degree()));
  return (1.0 + f.coeff_norm_sum()) * growth;
}

StarSeries add(const StarSeries& f, const StarSeries& g) {
  std::vector<Quaternion> coeffs(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t n = 0; n < coeffs.size(); ++n) {
    coeffs[n] = f.coeff(static_cast<int>(n)) + g.coeff(static_cast<int>(n));
  }
  return StarSeries(std::move(coeffs),
                    std::min(f.nominal_radius(), g.nominal_radius()));
}

StarSeries sub(const StarSeries& f, const StarSeries& g) {
  return add(f, -g);
}

StarSeries operator-(const StarSeries& f) {
  std::vector<Quaternion> coeffs(f.coeffs().size());
  for (size_t n = 0; n < coeffs.size(); ++n) coeffs[n] = -f.coeffs()[n];
  return StarSeries(std::move(coeffs), f.nominal_radius());
}

StarSeries star_mul(const StarSeries& f, const StarSeries& g) {
  const double radius = std::min(f.nominal_radius(), g.nominal_radius());
  if (f.is_zero() || g.is_zero()) {
    return StarSeries({}, radius);
  }
  check_cap(f.degree() + g.degree());
  std::vector<Quaternion> coeffs(
      static_cast<size_t>(f.degree() + g.degree()) + 1);
  for (size_t n = 0; n < f.coeffs().size(); ++n) {
    for (size_t m = 0; m < g.coeffs().size(); ++m) {
      coeffs[n + m] += f.coeffs()[n] * g.coeffs()[m];
    }
  }
  return StarSeries(std::move(coeffs), radius);
}

StarSeries star_pow(const StarSeries& f, int n) {
  StarSeries acc = StarSeries::constant(Quaternion::one(), f.nominal_radius());
  for (int m = 0; m < n; ++m) acc = star_mul(acc, f);
  return acc;
}

StarSeries scale_right(const StarSeries& f, const Quaternion& c) {
  std::vector<Quaternion> coeffs(f.coeffs().size());
  for (size_t n = 0; n < coeffs.size(); ++n) coeffs[n] = f.coeffs()[n] * c;
  return StarSeries(std::move(coeffs), f.nominal_radius());
}

StarSeries scale_left(const Quaternion& c, const StarSeries& f) {
  std::vector<Quaternion> coeffs(f.coeffs().size());
  for (size_t n = 0; n < coeffs.size(); ++n) coeffs[n] = c * f.coeffs()[n];
  return StarSeries(std::move(coeffs), f.nominal_radius());
}

StarSeries conjugate(const StarSeries& f) {
  std::vector<Quaternion> coeffs(f.coeffs().size());
  for (size_t n = 0; n < coeffs.size(); ++n) coeffs[n] = conj(f.coeffs()[n]);
  return StarSeries(std::move(coeffs), f.nominal_radius());
}

StarSeries symmetrize(const StarSeries& f) {
  StarSeries s = star_mul(f, conjugate(f));
  const double scale = 1.0 + s.max_coeff_norm();
  std::vector<Quaternion> coeffs = s.coeffs();
  for (Quaternion& c : coeffs) {
    if (imag_norm(c) > tol::kSymmetrizeReal * scale) {
      throw NotReal("symmetrization left imaginary residue " +
                    format_real(imag_norm(c)));
    }
    c = Quaternion(c.w);
  }
  return StarSeries(std::move(coeffs), s.nominal_radius());
}

StarSeries cullen_derivative(const StarSeries& f) {
  if (f.is_zero()) return f;
  std::vector<Quaternion> coeffs(f.coeffs().size() - 1);
  for (size_t n = 0; n < coeffs.size(); ++n) {
    coeffs[n] = static_cast<double>(n + 1) * f.coeffs()[n + 1];
  }
  return StarSeries(std::move(coeffs), f.nominal_radius());
}

StarSeries divide_linear(const StarSeries& f, const Quaternion& q0) {
  if (f.is_zero()) return f;
  const auto& d = f.coeffs();
  const int N = f.degree();
  std::vector<Quaternion> b(static_cast<size_t>(N));
  Quaternion carry = Quaternion::zero();
  for (int n = N; n >= 1; --n) {
    carry = d[static_cast<size_t>(n)] + q0 * carry;
    b[static_cast<size_t>(n) - 1] = carry;
  }
  const Quaternion residual = d[0] + q0 * b[0];
  const double scale = 1.0 + f.max_coeff_norm();
  if (norm(residual) > tol::kDivisionResidual * scale) {
    throw ResidualTooLarge("linear division residual " +
                           format_real(norm(residual)) + " at q0 = " +
                           to_string(q0));
  }
  return StarSeries(std::move(b), f.nominal_radius());
}

StarSeries sphere_polynomial(double x0, double y0) {
  return StarSeries({Quaternion(x0 * x0 + y0 * y0), Quaternion(-2.0 * x0),
                     Quaternion::one()});
}

SphereDivision divide_sphere(const StarSeries& f, double x0, double y0) {
  const double c = x0 * x0 + y0 * y0;
  std::vector<Quaternion> d = f.coeffs();
  if (d.size() < 3) {
    return {StarSeries({}, f.nominal_radius()),
            f.coeff(0), f.coeff(1)};
  }
  const int N = f.degree();
  std::vector<Quaternion> g(static_cast<size_t>(N) - 1);
  for (int n = N; n >= 2; --n) {
    const Quaternion top = d[static_cast<size_t>(n)];
    g[static_cast<size_t>(n) - 2] = top;
    d[static_cast<size_t>(n) - 1] += 2.0 * x0 * top;
    d[static_cast<size_t>(n) - 2] -= c * top;
  }
  return {StarSeries(std::move(g), f.nominal_radius()), d[0], d[1]};
}

}  // namespace srk
