#ifndef SUPERHYP_ALGEBRA_HPP
#define SUPERHYP_ALGEBRA_HPP

// Dense complex substrate: clock and shift matrices, the Vandermonde/DFT
// matrix that diagonalizes the shift, a reference matrix exponential and an
// LU determinant. Everything is templated on the real scalar so the same code
// runs in double (the default) or long double when a test or the lattice
// module needs headroom below double rounding.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "superhyp/core.hpp"

namespace superhyp {

/// sigma^k with sigma = exp(2 pi i / n); k is reduced mod n before the angle is formed.
/// The quarter turns are returned exactly so that, e.g., the n = 2 clock is diag(1, -1).
template <class Real = real>
complex<Real> root_of_unity(int n, long long k) {
  const long long r = mod(k, n);
  if (r == 0) return {Real(1), Real(0)};
  if (2 * r == n) return {Real(-1), Real(0)};
  if (4 * r == n) return {Real(0), Real(1)};
  if (4 * r == 3LL * n) return {Real(0), Real(-1)};
  const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(r) / Real(n);
  return std::polar(Real(1), angle);
}

template <class Real = real>
complex<Real> primitive_root(int n) {
  require_level(n);
  return root_of_unity<Real>(n, 1);
}

template <class Real = real>
cmatrix<Real> identity_matrix(int n) {
  return cmatrix<Real>::Identity(n, n);
}

/// Sigma_1: ones at (i+1 mod n, i).
template <class Real = real>
cmatrix<Real> shift_matrix(int n) {
  require_level(n);
  cmatrix<Real> s = cmatrix<Real>::Zero(n, n);
  for (int i = 0; i < n; ++i) s(mod(i + 1, n), i) = Real(1);
  return s;
}

/// Sigma_3 = diag(1, sigma, ..., sigma^{n-1}).
template <class Real = real>
cmatrix<Real> clock_matrix(int n) {
  require_level(n);
  cmatrix<Real> c = cmatrix<Real>::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = root_of_unity<Real>(n, i);
  return c;
}

/// W with W(j,k) = sigma^{-jk} / sqrt(n): row j carries powers of sigma^{n-j},
/// which is the orientation that makes W Sigma_3 W^dagger equal Sigma_1.
template <class Real = real>
cmatrix<Real> dft_matrix(int n) {
  require_level(n);
  const Real scale = Real(1) / std::sqrt(Real(n));
  cmatrix<Real> w(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      w(j, k) = scale * root_of_unity<Real>(n, -static_cast<long long>(j) * k);
  return w;
}

template <class Derived>
auto max_norm(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (a.size() == 0) return Real(0);
  return static_cast<Real>(a.cwiseAbs().maxCoeff());
}

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const auto v = a(i, j);
      if (!std::isfinite(std::real(v)) || !std::isfinite(std::imag(v))) return false;
    }
  return true;
}

template <class Real>
cmatrix<Real> matrix_power(const cmatrix<Real>& a, int k) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::invalid_matrix, "matrix_power needs a square matrix");
  if (k < 0) throw Error(ErrorCode::invalid_argument, "negative matrix power");
  cmatrix<Real> result = cmatrix<Real>::Identity(a.rows(), a.cols());
  cmatrix<Real> base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

inline constexpr int kTaylorOrder = 16;

/// exp(A) by scaling and squaring with a fixed-order Taylor polynomial.
/// A is scaled by 2^-s until its 1-norm is at most 0.5, where the order-16
/// remainder is ~1e-20, then squared back s times. tol must lie in (0, 1e-6];
/// the result meets it (relative, max-norm) for ||A|| <= 50.
template <class Real>
cmatrix<Real> mat_exp(const cmatrix<Real>& a, Real tol = Real(1e-14)) {
  if (a.rows() != a.cols() || a.rows() == 0) throw Error(ErrorCode::invalid_matrix, "mat_exp needs a non-empty square matrix");
  if (!all_finite(a)) throw Error(ErrorCode::invalid_matrix, "mat_exp input has non-finite entries");
  if (!(tol > Real(0) && tol <= Real(1e-6))) throw Error(ErrorCode::invalid_tolerance, "tol must lie in (0, 1e-6]");

  const Real norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > Real(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm1 / Real(0.5))));
  const cmatrix<Real> scaled = a / std::ldexp(Real(1), squarings);

  const Eigen::Index n = a.rows();
  cmatrix<Real> sum = cmatrix<Real>::Identity(n, n);
  cmatrix<Real> term = cmatrix<Real>::Identity(n, n);
  // The order-16 remainder at norm 0.5 is far below any admissible tol; stop
  // once a term can no longer move the sum.
  const Real stop = std::numeric_limits<Real>::epsilon() / Real(2);
  for (int k = 1; k <= kTaylorOrder; ++k) {
    term = (term * scaled) / Real(k);
    sum += term;
    if (max_norm(term) <= stop * max_norm(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Determinant by LU with partial pivoting on magnitude; ties go to the lowest row.
template <class Real>
complex<Real> determinant(const cmatrix<Real>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::invalid_matrix, "determinant needs a square matrix");
  if (!all_finite(a)) throw Error(ErrorCode::invalid_matrix, "determinant input has non-finite entries");
  cmatrix<Real> lu = a;
  const Eigen::Index n = lu.rows();
  complex<Real> det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    Real best = std::abs(lu(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const Real mag = std::abs(lu(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == Real(0)) return complex<Real>(0);
    if (pivot != col) {
      lu.row(pivot).swap(lu.row(col));
      det = -det;
    }
    const complex<Real> p = lu(col, col);
    det *= p;
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const complex<Real> factor = lu(r, col) / p;
      if (factor == complex<Real>(0)) continue;
      lu.row(r).tail(n - col - 1) -= factor * lu.row(col).tail(n - col - 1);
    }
  }
  return det;
}

/// Circulant matrix C(i,k) = first_column((i-k) mod n).
template <class Real>
cmatrix<Real> circulant(const cvector<Real>& first_column) {
  const int n = static_cast<int>(first_column.size());
  cmatrix<Real> c(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) c(i, k) = first_column(mod(i - k, n));
  return c;
}

/// W diag(lambda) W^dagger in O(n^2): only the first column is formed from the
/// spectrum, (1/n) sum_k sigma^{-ik} lambda_k, and the rest follows by circulance.
template <class Real>
cmatrix<Real> circulant_from_spectrum(const cvector<Real>& eigenvalues) {
  const int n = static_cast<int>(eigenvalues.size());
  require_level(n);
  cvector<Real> roots(n);
  for (int k = 0; k < n; ++k) roots(k) = root_of_unity<Real>(n, k);
  cvector<Real> column(n);
  for (int i = 0; i < n; ++i) {
    complex<Real> acc(0);
    for (int k = 0; k < n; ++k) acc += roots(mod(-static_cast<long long>(i) * k, n)) * eigenvalues(k);
    column(i) = acc / Real(n);
  }
  return circulant(column);
}

/// ||Sigma_1 - W Sigma_3 W^dagger||_max.
template <class Real = real>
Real diagonalize_shift_residual(int n) {
  const cmatrix<Real> w = dft_matrix<Real>(n);
  return max_norm(shift_matrix<Real>(n) - w * clock_matrix<Real>(n) * w.adjoint());
}

/// Residuals of every defining relation of the generalized Pauli pair.
struct PauliResiduals {
  real root_power = 0;      // |sigma^n - 1|
  real root_sum = 0;        // |1 + sigma + ... + sigma^{n-1}|
  real shift_power = 0;     // ||Sigma_1^n - 1||
  real clock_power = 0;     // ||Sigma_3^n - 1||
  real shift_adjoint = 0;   // ||Sigma_1^dagger - Sigma_1^{n-1}||
  real commutation = 0;     // ||Sigma_3 Sigma_1 - sigma Sigma_1 Sigma_3||
  real unitarity = 0;       // ||W W^dagger - 1||
  real diagonalization = 0; // ||Sigma_1 - W Sigma_3 W^dagger||

  real max() const {
    return std::max({root_power, root_sum, shift_power, clock_power, shift_adjoint, commutation, unitarity,
                     diagonalization});
  }
};

struct PauliContext {
  int n = 0;
  cx sigma;
  CMatrix sigma1;
  CMatrix sigma3;
  CMatrix w;

  PauliResiduals residuals() const;
};

/// Builds and validates the context; throws invariant-violation if any
/// relation misses `tol`.
PauliContext make_pauli_context(int n, real tol = 1e-13);

}  // namespace superhyp

#endif  // SUPERHYP_ALGEBRA_HPP
