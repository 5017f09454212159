#include "srk/poly_roots.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "srk/errors.hpp"

namespace srk {

std::vector<std::complex<double>> real_poly_roots(std::vector<double> coeffs) {
  double largest = 0.0;
  for (double c : coeffs) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) {
    throw ZeroFunction("root finding on the zero polynomial");
  }
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-14 * largest) {
    coeffs.pop_back();
  }
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 0) return {};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int row = 1; row < n; ++row) companion(row, row - 1) = 1.0;
  for (int row = 0; row < n; ++row) {
    companion(row, n - 1) = -coeffs[static_cast<size_t>(row)] / coeffs.back();
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  const auto values = solver.eigenvalues();
  std::vector<std::complex<double>> roots(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) roots[static_cast<size_t>(k)] = values[k];
  return roots;
}

}  // namespace srk
