#ifndef SUPERHYP_GENMATRIX_HPP
#define SUPERHYP_GENMATRIX_HPP

// The generating matrix exp((x/2)(w Sigma_1 + (1/w) Sigma_1^dagger)) =
// sum_k I_k(x) w^k Sigma_1^k, and its trace projections. Projecting on
// Sigma_1^j picks out the order class nk - j:
//
//   (1/n) tr{M Sigma_1^j} = (1/n) sum_l sigma^{lj} exp((x/2)(w sigma^l + sigma^{-l}/w))
//                         = sum_k I_{nk-j}(x) w^{nk-j}
//
// The three forms are exposed separately so they can check one another.

#include "superhyp/core.hpp"

namespace superhyp {

struct GeneratingMatrixEval {
  int n = 0;
  real x = 0;
  cx w;
  CMatrix matrix;
};

/// Spectral evaluation W diag(exp((x/2)(w sigma^k + sigma^{-k}/w))) W^dagger.
/// Requires w != 0 and |x| max(|w|, 1/|w|) <= 50.
GeneratingMatrixEval generating_matrix(int n, real x, cx w);

/// (1/n) tr{M Sigma_1^j}, the trace taken of the explicit matrix product.
cx trace_projection(int n, real x, cx w, int j);

/// (1/n) sum_l sigma^{lj} exp((x/2)(w sigma^l + sigma^{-l}/w)).
cx exponential_sum(int n, real x, cx w, int j);

/// Truncation order ending on a complete period:
/// n * ceil((|x| max(|w|,1/|w|) + 30) / n) + j.
int default_comb_order(int n, real x, cx w, int j);

/// sum over m = nk - j with |m| <= K of I_{|m|}(x) w^m. Requires K >= n + |x| + 20.
cx bessel_comb_series(int n, real x, cx w, int j, int K);

inline cx bessel_comb_series(int n, real x, cx w, int j) {
  return bessel_comb_series(n, x, w, j, default_comb_order(n, x, w, j));
}

}  // namespace superhyp

#endif  // SUPERHYP_GENMATRIX_HPP
