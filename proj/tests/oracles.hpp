#ifndef SUPERHYP_TESTS_ORACLES_HPP
#define SUPERHYP_TESTS_ORACLES_HPP

// Test-only reference computations. None of these share code with the
// library: series run in long double one exponent at a time, determinants
// use cofactor expansion, Bessel terms come from lgamma.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using wide = long double;

/// c_j(x) by walking the full exponential series and keeping exponents == j mod n.
inline wide super_hyperbolic(int n, int j, wide x, int terms = 400) {
  wide term = 1;
  wide sum = 0;
  for (int m = 0; m < terms; ++m) {
    if (m % n == j) sum += term;
    term *= x / (m + 1);
  }
  return sum;
}

/// I_k(x), x >= 0, every term formed independently from exp/lgamma.
inline wide bessel_i(int k, wide x, int terms = 200) {
  k = k < 0 ? -k : k;
  if (x == 0) return k == 0 ? 1 : 0;
  const wide lh = std::log(x / 2);
  wide sum = 0;
  for (int m = 0; m < terms; ++m)
    sum += std::exp((2 * m + k) * lh - std::lgamma(wide(m + 1)) - std::lgamma(wide(m + k + 1)));
  return sum;
}

/// Laplace expansion along the first row; fine for n <= 7.
inline std::complex<double> cofactor_determinant(const Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  if (n == 1) return a(0, 0);
  std::complex<double> det = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::MatrixXcd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index cc = 0, mc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, mc++) = a(r, cc);
      }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a(0, c) * cofactor_determinant(minor);
  }
  return det;
}

/// Plain O(n^3) product of three matrices without Eigen's kernels.
inline Eigen::MatrixXcd triple_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                       const Eigen::MatrixXcd& c) {
  const auto n = a.rows();
  Eigen::MatrixXcd ab = Eigen::MatrixXcd::Zero(n, n), out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j) ab(i, j) += a(i, k) * b(k, j);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) += ab(i, k) * c(k, j);
  return out;
}

/// Central difference of f at x with step h.
template <class F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace oracle

#endif  // SUPERHYP_TESTS_ORACLES_HPP
