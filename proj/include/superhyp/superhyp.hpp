#ifndef SUPERHYP_SUPERHYP_HPP
#define SUPERHYP_SUPERHYP_HPP

// The super hyperbolic system c_0(x)..c_{n-1}(x): the n-fold multisection of
// the exponential series. c_0, c_1 are cosh, sinh at n = 2.
//
// Two independent evaluation paths exist and every identity can run against
// either one:
//   series  sum_k x^{kn+j} / (kn+j)!, compensated, term ratios only
//   filter  (1/n) sum_k sigma^{-jk} exp(sigma^k x), the roots-of-unity filter
//
// Accuracy: for x >= 0 both paths are relative-accurate. For x < 0 the
// series alternates (n odd) and the filter cancels, so absolute error grows
// like e^{|x|} * eps; identity tolerances in this library scale accordingly.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "superhyp/core.hpp"

namespace superhyp {

enum class Method { series, filter };

std::string_view to_string(Method m);

/// Default relative stopping tolerance of the series path.
inline constexpr real kSeriesTol = 1e-17;

/// Truncated series for c_j(x). tol in (0, 1e-6]; summation stops once the
/// next term falls below tol * (|partial sum| + DBL_MIN) past the peak term.
real c_series(int n, int j, real x, real tol = kSeriesTol);

struct FilterEval {
  real value = 0;         // real part of the filter sum
  real imag_residue = 0;  // imaginary part, zero up to rounding
};

FilterEval c_filter_eval(int n, int j, real x);

inline real c_filter(int n, int j, real x) { return c_filter_eval(n, j, x).value; }

real c_value(Method m, int n, int j, real x);

struct SuperHypValues {
  int n = 0;
  real x = 0;
  RVector values;
  Method method = Method::series;
};

/// All n functions at x. Validates sum = e^x and nonnegativity for x >= 0
/// before returning; throws invariant-violation otherwise.
SuperHypValues c_all(int n, real x, Method method = Method::series);

/// e^{x Sigma_1} as the circulant W diag(e^{x sigma^k}) W^dagger; entry (i,k) is
/// c_{(i-k) mod n}(x). O(n^2). Requires |x| <= 50.
CMatrix exp_circulant(int n, real x);

/// |det e^{x Sigma_1} - 1|, the determinant computed by LU. Requires |x| <= 10.
real fundamental_identity_residual(int n, real x);

/// One monomial coeff * c_0^p0 * c_1^p1 * ... of an expanded determinant identity.
struct Monomial {
  int coeff;
  std::array<int, 4> powers;
};

/// The expanded circulant-determinant polynomials for n = 2, 3, 4, exactly as
/// printed in the source; each equals 1 on the super hyperbolic system.
std::span<const Monomial> printed_identity_monomials(int n);

real evaluate_printed_identity(int n, std::span<const real> c);

/// |P_n(c) - 1| for n in {2, 3, 4}; other n -> invalid-level.
real polynomial_identity_residual(int n, real x, Method method = Method::series);

/// Per-j residual of c_j(x+y) = sum_{k+l = j mod n} c_k(x) c_l(y). Requires |x|,|y| <= 10.
std::vector<real> addition_residual(int n, real x, real y, Method method = Method::series);

struct MixedResidual {
  real residual = 0;  // |lhs - Re(rhs)|
  real lhs = 0;
  cx rhs;
};

/// Left side: coefficient of Sigma_1^j in e^{x Sigma_1} e^{y Sigma_1^dagger},
///   sum_{k<j} c_k(x) c_{n-j+k}(y) + sum_{k>=j} c_k(x) c_{k-j}(y).
/// Right side: (1/n) sum_k sigma^{k(n-j)} exp(x sigma^k + y sigma^{n-k}).
MixedResidual mixed_product_residual(int n, real x, real y, int j, Method method = Method::series);

}  // namespace superhyp

#endif  // SUPERHYP_SUPERHYP_HPP
