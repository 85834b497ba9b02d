#include "superhyp/genmatrix.hpp"

#include <cmath>

#include "superhyp/algebra.hpp"
#include "superhyp/bessel.hpp"

namespace superhyp {

namespace {

real reach(cx w) {
  const real r = std::abs(w);
  return std::max(r, 1.0 / r);
}

void require_generating_domain(int n, real x, cx w) {
  require_level(n);
  if (w == cx(0)) throw Error(ErrorCode::invalid_argument, "w must be nonzero");
  if (!(std::abs(x) * reach(w) <= 50.0))
    throw Error(ErrorCode::overflow_domain, "|x| max(|w|,1/|w|) must be <= 50");
}

cx eigen_exponent(int n, real x, cx w, int l) {
  return (x / 2) * (w * root_of_unity(n, l) + root_of_unity(n, -l) / w);
}

}  // namespace

GeneratingMatrixEval generating_matrix(int n, real x, cx w) {
  require_generating_domain(n, x, w);
  if (x == 0) return {n, x, w, identity_matrix(n)};
  CVector spectrum(n);
  for (int l = 0; l < n; ++l) spectrum(l) = std::exp(eigen_exponent(n, x, w, l));
  return {n, x, w, circulant_from_spectrum(spectrum)};
}

cx trace_projection(int n, real x, cx w, int j) {
  require_generating_domain(n, x, w);
  require_index(n, j);
  const CMatrix m = generating_matrix(n, x, w).matrix;
  return (m * matrix_power(shift_matrix(n), j)).trace() / static_cast<real>(n);
}

cx exponential_sum(int n, real x, cx w, int j) {
  require_generating_domain(n, x, w);
  require_index(n, j);
  cx acc(0);
  for (int l = 0; l < n; ++l)
    acc += root_of_unity(n, static_cast<long long>(l) * j) * std::exp(eigen_exponent(n, x, w, l));
  return acc / static_cast<real>(n);
}

int default_comb_order(int n, real x, cx w, int j) {
  require_level(n);
  require_index(n, j);
  if (w == cx(0)) throw Error(ErrorCode::invalid_argument, "w must be nonzero");
  const int periods = static_cast<int>(std::ceil((std::abs(x) * reach(w) + 30.0) / n));
  return n * periods + j;
}

cx bessel_comb_series(int n, real x, cx w, int j, int K) {
  require_generating_domain(n, x, w);
  require_index(n, j);
  if (K < n + std::abs(x) + 20)
    throw Error(ErrorCode::invalid_argument, "K must be >= n + |x| + 20");
  const BesselTable table = bessel_table(K, x);
  // Orders m = nk - j, walked outward from the smallest representative.
  cx sum(0);
  for (int m = -j; m <= K; m += n) sum += table(m) * std::pow(w, m);
  for (int m = -j - n; m >= -K; m -= n) sum += table(m) * std::pow(w, m);
  return sum;
}

}  // namespace superhyp
