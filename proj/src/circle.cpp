#include "superhyp/circle.hpp"

#include <cmath>
#include <numbers>

#include "superhyp/algebra.hpp"
#include "superhyp/bessel.hpp"

namespace superhyp {

std::string_view to_string(BoundaryMode mode) {
  return mode == BoundaryMode::cyclic ? "cyclic" : "open";
}

Eigen::MatrixXd LatticeOperators::gauge_generator() const {
  return G.cast<real>() + alpha * Eigen::MatrixXd::Identity(dim(), dim());
}

LatticeOperators build_lattice(int N, BoundaryMode mode, real alpha) {
  if (N < 1) throw Error(ErrorCode::invalid_dimension, "half-width N must be >= 1");
  if (!(alpha >= 0 && alpha < 1)) throw Error(ErrorCode::invalid_gauge, "alpha must lie in [0, 1)");
  const int n = 2 * N + 1;

  LatticeOperators ops{N, mode, alpha, IMatrix::Zero(n, n), IMatrix::Zero(n, n), CMatrix::Zero(n, n)};
  for (int i = 0; i < n; ++i) ops.G(i, i) = i - N;
  for (int i = 0; i + 1 < n; ++i) ops.S(i + 1, i) = 1;
  if (mode == BoundaryMode::cyclic) ops.S(0, n - 1) = 1;
  for (int i = 0; i < n; ++i) {
    const real phase = 2 * std::numbers::pi * (ops.G(i, i) + alpha) / n;
    ops.sigma3(i, i) = std::polar(1.0, phase);
  }

  IMatrix power = IMatrix::Identity(n, n);
  for (int p = 0; p < n; ++p) power = power * ops.S;
  const IMatrix expected = mode == BoundaryMode::cyclic ? IMatrix(IMatrix::Identity(n, n)) : IMatrix(IMatrix::Zero(n, n));
  if (power != expected)
    throw Error(ErrorCode::invariant_violation, "S^{2N+1} has the wrong form");

  if (mode == BoundaryMode::cyclic) {
    const CMatrix s = ops.S.cast<cx>();
    const real defect = max_norm(ops.sigma3 * s - primitive_root(n) * s * ops.sigma3);
    if (!(defect <= 1e-12))
      throw Error(ErrorCode::invariant_violation, "clock-shift relation off by " + std::to_string(defect));
  }
  return ops;
}

CommutatorDefect commutator_check(const LatticeOperators& ops) {
  const int n = ops.dim();
  CommutatorDefect report;
  report.N = ops.N;
  report.mode = ops.mode;
  report.defect = ops.G * ops.S - ops.S * ops.G - ops.S;

  report.congruent = true;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      const long long v = report.defect(r, c);
      if (v == 0) continue;
      report.nonzero.push_back({r, c, v});
      if (v % n != 0) report.congruent = false;
    }

  if (ops.mode == BoundaryMode::cyclic) {
    const std::vector<DefectEntry> corner{{0, n - 1, -static_cast<long long>(n)}};
    report.matches_expected = report.nonzero == corner;
  } else {
    report.matches_expected = report.nonzero.empty();
  }

  // The gauge shift enters [G + alpha, S] only through alpha*S - S*alpha.
  const Eigen::MatrixXd s = ops.S.cast<real>();
  const Eigen::MatrixXd shift = ops.alpha * Eigen::MatrixXd::Identity(n, n);
  report.gauge_term = (shift * s - s * shift).cwiseAbs().maxCoeff();
  return report;
}

CMatrix generating_operator(int N, real x, cx w, BoundaryMode mode) {
  if (N < 1) throw Error(ErrorCode::invalid_dimension, "half-width N must be >= 1");
  if (w == cx(0)) throw Error(ErrorCode::invalid_argument, "w must be nonzero");
  require_finite_argument(x, 30.0);
  using wide = long double;
  const int n = 2 * N + 1;
  cmatrix<wide> s = cmatrix<wide>::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) s(i + 1, i) = 1;
  if (mode == BoundaryMode::cyclic) s(0, n - 1) = 1;
  const complex<wide> ww(w.real(), w.imag());
  const cmatrix<wide> a = (wide(x) / 2) * (ww * s + s.adjoint() / ww);
  return mat_exp<wide>(a).cast<cx>();
}

cx generating_operator_element(int N, real x, cx w, int m, int k) {
  if (std::abs(m) > N || std::abs(k) > N)
    throw Error(ErrorCode::index_out_of_range, "labels must satisfy |m|, |k| <= N");
  return generating_operator(N, x, w, BoundaryMode::open)(m + N, k + N);
}

std::vector<std::vector<ConvergencePoint>> convergence_study(const std::vector<int>& N_list, real x, cx w,
                                                             const std::vector<int>& orders) {
  if (N_list.empty()) throw Error(ErrorCode::invalid_argument, "N_list must be nonempty");
  for (std::size_t i = 1; i < N_list.size(); ++i)
    if (N_list[i] <= N_list[i - 1]) throw Error(ErrorCode::invalid_argument, "N_list must be increasing");
  for (const int order : orders)
    if (std::abs(order) > N_list.front()) throw Error(ErrorCode::invalid_argument, "|order| exceeds smallest N");

  std::vector<std::vector<ConvergencePoint>> table(orders.size());
  for (auto& row : table) row.reserve(N_list.size());
  for (const int N : N_list) {
    const CMatrix op = generating_operator(N, x, w, BoundaryMode::open);
    for (std::size_t o = 0; o < orders.size(); ++o) {
      const int order = orders[o];
      ConvergencePoint p;
      p.N = N;
      p.col = -(order / 2);
      p.row = p.col + order;
      p.element = op(p.row + N, p.col + N);
      p.expected = bessel_i(order, x) * std::pow(w, order);
      p.error = std::abs(p.element - p.expected);
      p.boundary_distance = N - std::max(std::abs(p.row), std::abs(p.col));
      p.boundary_dominated = !(p.boundary_distance > std::abs(x) + std::abs(order) + 5);
      table[o].push_back(p);
    }
  }
  return table;
}

std::vector<ConvergencePoint> convergence_study(const std::vector<int>& N_list, real x, cx w, int order) {
  return convergence_study(N_list, x, w, std::vector<int>{order}).front();
}

}  // namespace superhyp
