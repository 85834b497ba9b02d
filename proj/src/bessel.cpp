#include "superhyp/bessel.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace superhyp {

namespace {

constexpr real kRescaleAbove = 1e250;
constexpr real kRescaleFactor = 1e-250;

real parity_sign(int k, real x) {
  return (x < 0 && (std::abs(k) % 2 == 1)) ? -1.0 : 1.0;
}

// Ascending series at ax >= 0, k >= 0.
real series_kernel(int k, real ax, real tol) {
  const real half = ax / 2;
  real term = 1;
  for (int i = 1; i <= k; ++i) term *= half / i;
  const real q = half * half;
  real sum = 0;
  for (int m = 0; m < 100000; ++m) {
    sum += term;
    term *= q / ((m + 1.0) * (m + 1.0 + k));
    const bool past_peak = (m + 1.0) * (m + 1.0 + k) > q;
    if (term == 0 || (past_peak && term < tol * (sum + std::numeric_limits<real>::min()))) break;
  }
  return sum;
}

// Normalized downward recurrence at ax > 0. Returns I_0..I_top (top = start order).
std::vector<real> miller_kernel(int kmax, real ax) {
  const int start = miller_start_order(kmax, ax);
  std::vector<real> v(start + 2, 0.0);
  v[start] = 1;
  real norm = 0;
  for (int i = start; i >= 1; --i) {
    v[i - 1] = (2.0 * i / ax) * v[i] + v[i + 1];
    norm += 2 * v[i];
    if (v[i - 1] > kRescaleAbove) {
      for (int r = i - 1; r <= start; ++r) v[r] *= kRescaleFactor;
      norm *= kRescaleFactor;
    }
  }
  norm += v[0];
  const real scale = std::exp(ax) / norm;
  v.pop_back();
  for (real& value : v) value *= scale;
  return v;
}

}  // namespace

int miller_start_order(int kmax, real x) {
  const real ax = std::abs(x);
  return kmax + static_cast<int>(std::ceil(10.0 + ax + 15.0 * std::sqrt(std::max(ax, 1.0))));
}

real bessel_i_series(int k, real x, real tol) {
  require_finite_argument(x);
  k = std::abs(k);
  if (x == 0) return k == 0 ? 1.0 : 0.0;
  return parity_sign(k, x) * series_kernel(k, std::abs(x), tol);
}

real bessel_i(int k, real x, real tol) {
  require_finite_argument(x);
  if (!(tol > 0 && tol <= 1e-6)) throw Error(ErrorCode::invalid_tolerance, "tol must lie in (0, 1e-6]");
  k = std::abs(k);
  if (x == 0) return k == 0 ? 1.0 : 0.0;
  const real ax = std::abs(x);
  if (ax <= kBesselSeriesLimit) return parity_sign(k, x) * series_kernel(k, ax, tol);
  return parity_sign(k, x) * miller_kernel(k, ax)[k];
}

BesselTable bessel_table(int kmax, real x) {
  if (kmax < 0) throw Error(ErrorCode::invalid_argument, "kmax must be >= 0");
  require_finite_argument(x);
  BesselTable table{x, kmax, RVector::Zero(kmax + 1), 0.0};
  if (x == 0) {
    table.values(0) = 1;
    return table;
  }
  const std::vector<real> run = miller_kernel(kmax, std::abs(x));
  real total = 0;
  for (std::size_t k = 0; k < run.size(); ++k) {
    const real signed_value = parity_sign(static_cast<int>(k), x) * run[k];
    if (static_cast<int>(k) <= kmax) table.values(k) = signed_value;
    total += (k == 0 ? 1.0 : 2.0) * signed_value;
  }
  table.norm_residual = std::abs(total - std::exp(x));
  return table;
}

ClassicResiduals classic_identity_residuals(real x, int K) {
  if (K < 2 * std::max(8.0, std::abs(x)))
    throw Error(ErrorCode::invalid_argument, "truncation order K must be >= 2 max(8, |x|)");
  const BesselTable t = bessel_table(K, x);
  real unity = t(0), plus = t(0), minus = t(0), even = t(0), odd = 0;
  for (int k = 1; k <= K; ++k) {
    const real sign = (k % 2 == 0) ? 1.0 : -1.0;
    plus += 2 * t(k);
    minus += 2 * sign * t(k);
    if (k % 2 == 0) {
      even += 2 * t(k);
      unity += 2 * ((k / 2) % 2 == 0 ? 1.0 : -1.0) * t(k);
    } else {
      odd += 2 * t(k);
    }
  }
  return {std::abs(unity - 1.0), std::abs(plus - std::exp(x)), std::abs(minus - std::exp(-x)),
          std::abs(even - std::cosh(x)), std::abs(odd - std::sinh(x))};
}

real generating_function_residual(real x, cx w, int K) {
  if (w == cx(0)) throw Error(ErrorCode::invalid_argument, "w must be nonzero");
  const real r = std::abs(w);
  if (r < 0.5 || r > 2.0) throw Error(ErrorCode::invalid_argument, "|w| must lie in [0.5, 2]");
  if (K < 0) throw Error(ErrorCode::invalid_argument, "K must be >= 0");
  const BesselTable t = bessel_table(K, x);
  const cx lhs = std::exp((x / 2) * (w + 1.0 / w));
  cx sum = t(0);
  cx up(1), down(1);
  const cx winv = 1.0 / w;
  for (int k = 1; k <= K; ++k) {
    up *= w;
    down *= winv;
    sum += t(k) * (up + down);
  }
  return std::abs(lhs - sum);
}

}  // namespace superhyp
