#include "superhyp/superhyp.hpp"

#include <cmath>
#include <limits>

#include "superhyp/algebra.hpp"

namespace superhyp {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(real v) {
    const real t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      carry_ += (sum_ - t) + v;
    else
      carry_ += (v - t) + sum_;
    sum_ = t;
  }
  real value() const { return sum_ + carry_; }

 private:
  real sum_ = 0;
  real carry_ = 0;
};

void require_tolerance(real tol) {
  if (!(tol > 0 && tol <= 1e-6)) throw Error(ErrorCode::invalid_tolerance, "tol must lie in (0, 1e-6]");
}

constexpr int kMaxSeriesTerms = 100000;

constexpr std::array<Monomial, 2> kLevel2 = {{
    {1, {2, 0, 0, 0}},
    {-1, {0, 2, 0, 0}},
}};

constexpr std::array<Monomial, 4> kLevel3 = {{
    {1, {3, 0, 0, 0}},
    {1, {0, 3, 0, 0}},
    {1, {0, 0, 3, 0}},
    {-3, {1, 1, 1, 0}},
}};

// c0^4 - c1^4 + c2^4 - c3^4 - 2c0^2c2^2 + 2c1^2c3^2
//   - 4c0^2c1c3 + 4c0c1^2c2 - 4c1c2^2c3 + 4c0c2c3^2
constexpr std::array<Monomial, 10> kLevel4 = {{
    {1, {4, 0, 0, 0}},
    {-1, {0, 4, 0, 0}},
    {1, {0, 0, 4, 0}},
    {-1, {0, 0, 0, 4}},
    {-2, {2, 0, 2, 0}},
    {2, {0, 2, 0, 2}},
    {-4, {2, 1, 0, 1}},
    {4, {1, 2, 1, 0}},
    {-4, {0, 1, 2, 1}},
    {4, {1, 0, 1, 2}},
}};

}  // namespace

std::string_view to_string(Method m) {
  return m == Method::series ? "series" : "filter";
}

real c_series(int n, int j, real x, real tol) {
  require_level(n);
  require_index(n, j);
  require_finite_argument(x);
  require_tolerance(tol);
  if (x == 0) return j == 0 ? 1.0 : 0.0;

  real term = 1;
  for (int m = 1; m <= j; ++m) term *= x / m;

  CompensatedSum sum;
  long long order = j;  // exponent of the current term
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    sum.add(term);
    for (int m = 1; m <= n; ++m) term *= x / static_cast<real>(order + m);
    order += n;
    const bool past_peak = static_cast<real>(order) > std::abs(x);
    if (past_peak && std::abs(term) < tol * (std::abs(sum.value()) + std::numeric_limits<real>::min())) break;
    if (term == 0) break;
  }
  return sum.value();
}

FilterEval c_filter_eval(int n, int j, real x) {
  require_level(n);
  require_index(n, j);
  require_finite_argument(x);
  cx acc(0);
  for (int k = 0; k < n; ++k) {
    const cx root = root_of_unity(n, k);
    acc += root_of_unity(n, -static_cast<long long>(j) * k) * std::exp(root * x);
  }
  acc /= static_cast<real>(n);
  return {acc.real(), acc.imag()};
}

real c_value(Method m, int n, int j, real x) {
  return m == Method::series ? c_series(n, j, x) : c_filter(n, j, x);
}

SuperHypValues c_all(int n, real x, Method method) {
  require_level(n);
  SuperHypValues out{n, x, RVector(n), method};
  for (int j = 0; j < n; ++j) out.values(j) = c_value(method, n, j, x);

  const real scale = std::exp(std::abs(x));
  const real sum_defect = std::abs(out.values.sum() - std::exp(x));
  if (!(sum_defect <= 1e-11 * scale))
    throw Error(ErrorCode::invariant_violation, "sum of c_j misses e^x by " + std::to_string(sum_defect));
  if (x >= 0) {
    const real floor = -1e-14 * scale;
    for (int j = 0; j < n; ++j)
      if (out.values(j) < floor)
        throw Error(ErrorCode::invariant_violation, "negative c_" + std::to_string(j) + " at x >= 0");
  }
  return out;
}

CMatrix exp_circulant(int n, real x) {
  require_level(n);
  require_finite_argument(x, 50.0);
  if (x == 0) return identity_matrix(n);
  CVector spectrum(n);
  for (int k = 0; k < n; ++k) spectrum(k) = std::exp(root_of_unity(n, k) * x);
  return circulant_from_spectrum(spectrum);
}

real fundamental_identity_residual(int n, real x) {
  require_finite_argument(x, 10.0);
  return std::abs(determinant(exp_circulant(n, x)) - cx(1));
}

std::span<const Monomial> printed_identity_monomials(int n) {
  switch (n) {
    case 2: return kLevel2;
    case 3: return kLevel3;
    case 4: return kLevel4;
    default:
      throw Error(ErrorCode::invalid_level, "printed identity exists only for n in {2,3,4}, got " + std::to_string(n));
  }
}

real evaluate_printed_identity(int n, std::span<const real> c) {
  const auto monomials = printed_identity_monomials(n);
  if (static_cast<int>(c.size()) != n) throw Error(ErrorCode::invalid_argument, "need exactly n values");
  real total = 0;
  for (const Monomial& mono : monomials) {
    real product = mono.coeff;
    for (int i = 0; i < n; ++i)
      for (int p = 0; p < mono.powers[i]; ++p) product *= c[i];
    total += product;
  }
  return total;
}

real polynomial_identity_residual(int n, real x, Method method) {
  printed_identity_monomials(n);  // level check before any evaluation
  const SuperHypValues v = c_all(n, x, method);
  return std::abs(evaluate_printed_identity(n, std::span<const real>(v.values.data(), n)) - 1.0);
}

std::vector<real> addition_residual(int n, real x, real y, Method method) {
  require_finite_argument(x, 10.0);
  require_finite_argument(y, 10.0);
  const RVector at_x = c_all(n, x, method).values;
  const RVector at_y = c_all(n, y, method).values;
  std::vector<real> residuals(n);
  for (int j = 0; j < n; ++j) {
    real rhs = 0;
    for (int k = 0; k < n; ++k) rhs += at_x(k) * at_y(mod(j - k, n));
    residuals[j] = std::abs(c_value(method, n, j, x + y) - rhs);
  }
  return residuals;
}

MixedResidual mixed_product_residual(int n, real x, real y, int j, Method method) {
  require_level(n);
  require_index(n, j);
  const RVector at_x = c_all(n, x, method).values;
  const RVector at_y = c_all(n, y, method).values;

  real lhs = 0;
  for (int k = 0; k < j; ++k) lhs += at_x(k) * at_y(n - j + k);
  for (int k = j; k < n; ++k) lhs += at_x(k) * at_y(k - j);

  cx rhs(0);
  for (int k = 0; k < n; ++k) {
    const cx exponent = x * root_of_unity(n, k) + y * root_of_unity(n, n - k);
    rhs += root_of_unity(n, static_cast<long long>(k) * (n - j)) * std::exp(exponent);
  }
  rhs /= static_cast<real>(n);
  return {std::abs(lhs - rhs.real()), lhs, rhs};
}

}  // namespace superhyp
