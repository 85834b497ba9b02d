#include "superhyp/algebra.hpp"

namespace superhyp {

PauliResiduals PauliContext::residuals() const {
  PauliResiduals r;
  cx power(1);
  cx sum(0);
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= sigma;
  }
  r.root_power = std::abs(power - cx(1));
  r.root_sum = std::abs(sum);

  const CMatrix one = identity_matrix(n);
  r.shift_power = max_norm(matrix_power(sigma1, n) - one);
  r.clock_power = max_norm(matrix_power(sigma3, n) - one);
  r.shift_adjoint = max_norm(CMatrix(sigma1.adjoint()) - matrix_power(sigma1, n - 1));
  r.commutation = max_norm(sigma3 * sigma1 - sigma * sigma1 * sigma3);
  r.unitarity = max_norm(w * w.adjoint() - one);
  r.diagonalization = max_norm(sigma1 - w * sigma3 * w.adjoint());
  return r;
}

PauliContext make_pauli_context(int n, real tol) {
  PauliContext ctx{n, primitive_root(n), shift_matrix(n), clock_matrix(n), dft_matrix(n)};
  const real worst = ctx.residuals().max();
  if (!(worst <= tol))
    throw Error(ErrorCode::invariant_violation,
                "Pauli relations for n=" + std::to_string(n) + " miss tolerance: " + std::to_string(worst));
  return ctx;
}

}  // namespace superhyp
