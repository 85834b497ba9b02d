#ifndef SUPERHYP_CIRCLE_HPP
#define SUPERHYP_CIRCLE_HPP

// Truncations of quantum mechanics on the circle. The odd dimension 2N+1 is
// labelled |-N>, ..., |N>, with G|m> = m|m> and the shift S|m> = |m+1>.
//
//   cyclic  S wraps |N> -> |-N>; this is exactly the generalized Pauli shift
//           of dimension 2N+1, and [G,S] = S holds mod 2N+1.
//   open    no wraparound; [G,S] = S holds exactly, S is no longer unitary.
//
// Basis index i corresponds to label i - N.

#include <string_view>
#include <vector>

#include "superhyp/core.hpp"

namespace superhyp {

enum class BoundaryMode { cyclic, open };

std::string_view to_string(BoundaryMode mode);

struct LatticeOperators {
  int N = 0;
  BoundaryMode mode = BoundaryMode::cyclic;
  real alpha = 0;
  IMatrix G;       // diag(-N..N), integer-exact
  IMatrix S;       // shift, 0/1 entries
  CMatrix sigma3;  // exp(2 pi i (G + alpha) / (2N+1))

  int dim() const { return 2 * N + 1; }
  Eigen::MatrixXd gauge_generator() const;  // G + alpha * 1
};

/// Requires N >= 1 and alpha in [0, 1); validates S^{2N+1} (identity when
/// cyclic, zero when open) and, cyclic only, sigma3 S = sigma S sigma3.
LatticeOperators build_lattice(int N, BoundaryMode mode, real alpha = 0);

struct DefectEntry {
  int row;
  int col;
  long long value;

  bool operator==(const DefectEntry&) const = default;
};

struct CommutatorDefect {
  int N = 0;
  BoundaryMode mode = BoundaryMode::cyclic;
  IMatrix defect;                   // [G,S] - S, integer arithmetic
  std::vector<DefectEntry> nonzero; // column-major order
  bool congruent = false;           // every entry is 0 mod 2N+1
  bool matches_expected = false;    // cyclic: only (0,2N) = -(2N+1); open: none
  real gauge_term = 0;              // max |alpha S - S alpha|, identically 0
};

CommutatorDefect commutator_check(const LatticeOperators& ops);

/// exp((x/2)(w S + (1/w) S^dagger)) on the truncated space, evaluated in long
/// double and rounded once. Requires |x| <= 30 and w != 0.
CMatrix generating_operator(int N, real x, cx w, BoundaryMode mode = BoundaryMode::open);

/// <m| exp((x/2)(w S + (1/w) S^dagger)) |k> in open mode, |m|,|k| <= N.
/// Far from the boundary this approaches I_{m-k}(x) w^{m-k}.
cx generating_operator_element(int N, real x, cx w, int m, int k);

struct ConvergencePoint {
  int N = 0;
  int row = 0;  // label m
  int col = 0;  // label k, m - k = order
  cx element;
  cx expected;
  real error = 0;
  int boundary_distance = 0;
  bool boundary_dominated = false;  // distance <= |x| + |order| + 5
};

/// Error of the centred element of order m - k against I_order(x) w^order for
/// each N. N_list must be increasing with |order| <= N_list.front().
std::vector<ConvergencePoint> convergence_study(const std::vector<int>& N_list, real x, cx w, int order);

/// Same study for several orders at once; one operator per N is shared by all
/// of them. Result is indexed [order position][N position].
std::vector<std::vector<ConvergencePoint>> convergence_study(const std::vector<int>& N_list, real x, cx w,
                                                             const std::vector<int>& orders);

}  // namespace superhyp

#endif  // SUPERHYP_CIRCLE_HPP
