#include "srk/zero_finder.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "srk/poly_roots.hpp"
#include "srk/slice_calculus.hpp"

namespace srk {

namespace {

struct Cluster {
  double sum_x = 0.0;
  double sum_y = 0.0;
  int count = 0;
  double x() const { return sum_x / count; }
  double y() const { return sum_y / count; }
};

// An orthonormal imaginary frame (axis, J, K) with axis * J = K.
void orthogonal_frame(const Quaternion& axis, Quaternion* J, Quaternion* K) {
  const Quaternion seed =
      std::abs(axis.x) < 0.9 ? Quaternion::i() : Quaternion::j();
  // Cross products of purely imaginary units via the Hamilton product.
  const Quaternion cross = imag(axis * seed);
  *J = unit(cross);
  *K = imag(axis * *J);
}

// Solves step * dc-part + orthogonal-part * ds = target in the real frame
// adapted to the slice of q. Returns false when the frame is singular.
bool solve_frame(const Quaternion& axis, const Quaternion& dc,
                 const Quaternion& ds, const Quaternion& target,
                 Quaternion* step) {
  Quaternion J, K;
  orthogonal_frame(axis, &J, &K);
  const Quaternion cols[4] = {dc, axis * dc, J * ds, K * ds};
  Eigen::Matrix4d M;
  for (int c = 0; c < 4; ++c) {
    M(0, c) = cols[c].w;
    M(1, c) = cols[c].x;
    M(2, c) = cols[c].y;
    M(3, c) = cols[c].z;
  }
  const Eigen::FullPivLU<Eigen::Matrix4d> lu(M);
  if (!lu.isInvertible()) return false;
  const Eigen::Vector4d rhs(target.w, target.x, target.y, target.z);
  const Eigen::Vector4d u = lu.solve(rhs);
  *step = Quaternion(u[0]) + axis * u[1] + J * u[2] + K * u[3];
  return true;
}

Quaternion newton_polish(const StarSeries& f, const StarSeries& df,
                         Quaternion start, double scale) {
  Quaternion best = start;
  double best_residual = norm(eval(f, start));
  Quaternion q = start;
  for (int iter = 0; iter < 24; ++iter) {
    const Quaternion fq = eval(f, q);
    const double residual = norm(fq);
    if (residual < best_residual) {
      best = q;
      best_residual = residual;
    }
    if (residual <= 1e-15 * scale) break;
    Quaternion step;
    if (imag_norm(q) <= tol::kRealPoint) {
      const Quaternion dc = eval(df, q);
      if (norm(dc) <= tol::kZeroInversion) break;
      step = -(fq * qinv(dc));
    } else {
      const SliceCoordinates c = slice_decompose(q);
      const SphericalPair sp = spherical_pair(f, q);
      const Quaternion dc = eval(df, q);
      if (!solve_frame(c.axis, dc, sp.derivative, -fq, &step)) break;
    }
    if (norm(step) > 1.0 + norm(q)) break;
    q += step;
  }
  return best;
}

}  // namespace

double sphere_distance(const Quaternion& q, double x0, double y0) {
  return std::hypot(real(q) - x0, imag_norm(q) - y0);
}

std::vector<ZeroSphere> locate_zeros(const StarSeries& f, double max_norm) {
  if (f.is_zero()) {
    throw ZeroFunction("zero set of the zero series is everything");
  }
  if (f.degree() == 0) return {};

  // A series that is already real central vanishes on whole spheres at its
  // complex conjugate root pairs; symmetrizing it would square every root
  // and ruin their conditioning.
  const bool folded = !f.has_real_coeffs(tol::kSymmetrizeReal);
  const StarSeries fs = folded ? symmetrize(f) : f;
  std::vector<double> real_coeffs;
  real_coeffs.reserve(fs.coeffs().size());
  for (const Quaternion& c : fs.coeffs()) real_coeffs.push_back(c.w);
  const auto roots = real_poly_roots(real_coeffs);

  std::vector<Cluster> clusters;
  for (const auto& root : roots) {
    const double x = root.real();
    const double y = std::abs(root.imag());
    const double tolerance = 1e-5 * (1.0 + std::hypot(x, y));
    Cluster* home = nullptr;
    for (Cluster& c : clusters) {
      if (std::hypot(c.x() - x, c.y() - y) <= tolerance) {
        home = &c;
        break;
      }
    }
    if (home == nullptr) {
      clusters.push_back({});
      home = &clusters.back();
    }
    home->sum_x += x;
    home->sum_y += y;
    home->count += 1;
  }

  const StarSeries df = cullen_derivative(f);
  std::vector<ZeroSphere> out;
  for (const Cluster& c : clusters) {
    const double x0 = c.x();
    const double y0 = c.y();
    const double r = std::hypot(x0, y0);
    if (std::isfinite(max_norm) && r > max_norm * (1.0 + 1e-9) + 1e-9) {
      continue;
    }
    const double scale = eval_scale(f, r);
    const double certified = tol::kDivisionResidual * scale;
    ZeroSphere zero;
    if (y0 <= 1e-7 * (1.0 + std::abs(x0))) {
      zero.point = newton_polish(f, df, Quaternion(x0), scale);
      zero.x0 = real(zero.point);
      zero.y0 = imag_norm(zero.point) > tol::kRealPoint ? imag_norm(zero.point)
                                                        : 0.0;
      zero.multiplicity = std::max(1, folded ? c.count / 2 : c.count);
      zero.residual = norm(eval(f, zero.point));
      if (zero.residual > certified) {
        throw ResidualTooLarge("real zero candidate near " + format_real(x0) +
                               " does not certify; residual " +
                               format_real(zero.residual));
      }
    } else if (!folded) {
      const Quaternion q0 = Quaternion(x0, y0);
      zero.x0 = x0;
      zero.y0 = y0;
      zero.whole_sphere = true;
      zero.multiplicity = std::max(1, c.count / 2);
      zero.point = q0;
      zero.residual = norm(eval(f, q0));
      if (zero.residual > certified) {
        throw ResidualTooLarge("zero sphere candidate at x0 = " +
                               format_real(x0) + ", y0 = " + format_real(y0) +
                               " does not certify; residual " +
                               format_real(zero.residual));
      }
    } else {
      const Quaternion q0 = Quaternion(x0, y0);
      const SphericalPair sp = spherical_pair(f, q0);
      const double flat = 1e-8 * scale;
      if (norm(sp.value) <= flat && norm(sp.derivative) <= flat) {
        zero.x0 = x0;
        zero.y0 = y0;
        zero.whole_sphere = true;
        zero.multiplicity = std::max(1, c.count / 4);
        zero.point = q0;
        zero.residual = norm(eval(f, q0));
      } else {
        if (norm(sp.derivative) <= tol::kZeroInversion) {
          throw ResidualTooLarge(
              "cannot classify zero sphere at x0 = " + format_real(x0) +
              ", y0 = " + format_real(y0));
        }
        const Quaternion m = -(sp.value * qinv(sp.derivative));
        if (std::abs(norm(m) - y0) > 0.1 * (1.0 + y0)) {
          throw ResidualTooLarge(
              "zero candidate leaves its sphere at x0 = " + format_real(x0) +
              ", y0 = " + format_real(y0) + " by " +
              format_real(std::abs(norm(m) - y0)));
        }
        const Quaternion start = norm(m) > tol::kZeroInversion
                                     ? Quaternion(x0) + unit(m) * y0
                                     : q0;
        zero.point = newton_polish(f, df, start, scale);
        zero.x0 = real(zero.point);
        zero.y0 = imag_norm(zero.point);
        zero.multiplicity = std::max(1, c.count / 2);
        zero.residual = norm(eval(f, zero.point));
        if (zero.residual > certified) {
          throw ResidualTooLarge(
              "zero candidate on the sphere at x0 = " + format_real(x0) +
              ", y0 = " + format_real(y0) + " does not certify; residual " +
              format_real(zero.residual));
        }
      }
    }
    out.push_back(zero);
  }

  std::sort(out.begin(), out.end(), [](const ZeroSphere& a, const ZeroSphere& b) {
    const double ra = std::hypot(a.x0, a.y0);
    const double rb = std::hypot(b.x0, b.y0);
    if (ra != rb) return ra < rb;
    if (a.x0 != b.x0) return a.x0 < b.x0;
    return a.y0 < b.y0;
  });
  return out;
}

}  // namespace srk
