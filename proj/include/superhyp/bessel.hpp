#ifndef SUPERHYP_BESSEL_HPP
#define SUPERHYP_BESSEL_HPP

// Modified Bessel functions of the first kind, integer order, real argument.
// I_{-k} = I_k and I_k(-x) = (-1)^k I_k(x) are applied up front, so the
// numerical kernels only ever see k >= 0 and x >= 0.

#include <algorithm>

#include "superhyp/core.hpp"

namespace superhyp {

/// Below this |x| single values come from the ascending series; above it from
/// a normalized backward recurrence.
inline constexpr real kBesselSeriesLimit = 20.0;

real bessel_i(int k, real x, real tol = 1e-17);

/// Ascending series only; exposed for cross-checks against the recurrence.
real bessel_i_series(int k, real x, real tol = 1e-17);

/// Starting order of the downward recurrence for orders 0..kmax at x.
int miller_start_order(int kmax, real x);

struct BesselTable {
  real x = 0;
  int kmax = 0;
  RVector values;          // I_0(x) .. I_kmax(x)
  real norm_residual = 0;  // |I_0 + 2 sum_{k>=1} I_k - e^x| over the whole recurrence run

  /// I_k for |k| <= kmax, negative orders by symmetry.
  real operator()(int k) const { return values(std::abs(k)); }
};

/// One Miller pass: downward from seed (0, 1) at miller_start_order, then
/// normalized by e^x = I_0 + 2 sum I_k.
BesselTable bessel_table(int kmax, real x);

struct ClassicResiduals {
  real unity = 0;      // 1      = I_0 + 2 sum (-1)^k I_{2k}
  real exp_plus = 0;   // e^x    = I_0 + 2 sum I_k
  real exp_minus = 0;  // e^-x   = I_0 + 2 sum (-1)^k I_k
  real cosh = 0;       // cosh x = I_0 + 2 sum I_{2k}
  real sinh = 0;       // sinh x = 2 sum I_{2k-1}

  real max() const { return std::max({unity, exp_plus, exp_minus, cosh, sinh}); }
};

/// Sums truncated at order K; requires K >= 2 max(8, |x|).
ClassicResiduals classic_identity_residuals(real x, int K);

/// |exp((x/2)(w + 1/w)) - sum_{|k|<=K} I_k(x) w^k|; w must be nonzero with
/// |w| in [0.5, 2].
real generating_function_residual(real x, cx w, int K);

}  // namespace superhyp

#endif  // SUPERHYP_BESSEL_HPP
