#pragma once

#include <complex>
#include <vector>

namespace srk {

/// All complex roots, with multiplicity, of the real-coefficient
/// polynomial sum_n coeffs[n] x^n, computed as eigenvalues of the
/// companion matrix. Leading coefficients negligible relative to the
/// largest one are trimmed first. Throws ZeroFunction for the zero
/// polynomial.
std::vector<std::complex<double>> real_poly_roots(std::vector<double> coeffs);

}  // namespace srk
