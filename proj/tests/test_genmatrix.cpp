#include <doctest.h>

#include <cmath>
#include <numbers>

#include "superhyp/algebra.hpp"
#include "superhyp/bessel.hpp"
#include "superhyp/genmatrix.hpp"

using namespace superhyp;

namespace {

const cx kWs[] = {cx(1.0), cx(0.8), std::polar(1.0, std::numbers::pi / 5)};

double reach(cx w) { return std::max(std::abs(w), 1 / std::abs(w)); }

}  // namespace

TEST_SUITE("genmatrix") {

TEST_CASE("n = 2 at w = 1 is cosh 1 + sinh sigma_1") {
  for (double x : {-1.5, 0.3, 2.0}) {
    const CMatrix m = generating_matrix(2, x, 1.0).matrix;
    CHECK(std::abs(m(0, 0) - std::cosh(x)) <= 1e-14 * std::cosh(x));
    CHECK(std::abs(m(1, 1) - std::cosh(x)) <= 1e-14 * std::cosh(x));
    CHECK(std::abs(m(0, 1) - std::sinh(x)) <= 1e-14 * std::cosh(x));
    CHECK(std::abs(m(1, 0) - std::sinh(x)) <= 1e-14 * std::cosh(x));
  }
  // General w: the argument becomes (x/2)(w + 1/w).
  const cx w(0.9, 0.2);
  const cx arg = 0.7 / 2 * (w + 1.0 / w);
  const CMatrix m = generating_matrix(2, 0.7, w).matrix;
  CHECK(std::abs(m(0, 0) - std::cosh(arg)) <= 1e-14);
  CHECK(std::abs(m(1, 0) - std::sinh(arg)) <= 1e-14);
}

TEST_CASE("x = 0 gives the identity") {
  for (int n = 2; n <= 7; ++n) CHECK(max_norm(generating_matrix(n, 0.0, cx(0.6, 0.5)).matrix - identity_matrix(n)) == 0.0);
}

TEST_CASE("n = 3 first column holds the Bessel order classes") {
  const CMatrix m = generating_matrix(3, 1.0, 1.0).matrix;
  // Frozen from 30-digit sums over |k| <= 20 of I_{3k-j}(1).
  CHECK(std::abs(m(0, 0) - 1.3104477159614374) <= 1e-14);
  CHECK(std::abs(m(1, 0) - 0.7039170562488039) <= 1e-14);
  CHECK(std::abs(m(2, 0) - 0.7039170562488039) <= 1e-14);
  const BesselTable t = bessel_table(40, 1.0);
  for (int r = 0; r < 3; ++r) {
    double sum = 0;
    for (int k = -40; k <= 40; ++k)
      if (mod(k, 3) == r) sum += t(k);
    CHECK(std::abs(m(r, 0) - sum) <= 1e-14);
  }
}

TEST_CASE("spectral path agrees with mat_exp") {
  for (int n : {2, 3, 5, 8})
    for (cx w : kWs)
      for (double x : {-2.0, 0.5, 3.0}) {
        const CMatrix s = shift_matrix(n);
        const CMatrix dense = mat_exp(CMatrix((x / 2) * (w * s + s.adjoint() / w)));
        const CMatrix spectral = generating_matrix(n, x, w).matrix;
        CHECK(max_norm(spectral - dense) <= 1e-12 * std::exp(std::abs(x) * reach(w)));
      }
}

TEST_CASE("generating matrix is circulant") {
  for (int n : {3, 6})
    for (cx w : kWs) {
      const CMatrix m = generating_matrix(n, 1.7, w).matrix;
      const double scale = max_norm(m);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) CHECK(std::abs(m(i, k) - m(mod(i - k, n), 0)) <= 1e-12 * scale);
    }
}

TEST_CASE("real symmetric at w = 1") {
  for (int n = 2; n <= 8; ++n) {
    const CMatrix m = generating_matrix(n, 2.0, 1.0).matrix;
    CHECK(m.imag().cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(max_norm(m - m.transpose()) <= 1e-12 * max_norm(m));
  }
}

TEST_CASE("trace projection spot values") {
  CHECK(std::abs(trace_projection(2, 1.0, 1.0, 0) - 1.5430806348152437) <= 1e-14);
  for (int n = 2; n <= 5; ++n) CHECK(std::abs(trace_projection(n, 0.0, cx(0.8), 0) - cx(1)) <= 1e-15);
  // Middle line of the n = 3 projections: sum_k I_{3k-1}(1).
  CHECK(std::abs(trace_projection(3, 1.0, 1.0, 1) - 0.7039170562488039) <= 1e-14);
}

TEST_CASE("exponential sum closed forms") {
  for (double x : {0.5, 1.0, 2.0, -1.0}) {
    const cx v = exponential_sum(3, x, 1.0, 0);
    // At w = 1 the exponents are x cos(2 pi l / 3), so both non-trivial terms are e^{-x/2}.
    const double closed = (std::exp(x) + 2 * std::exp(-x / 2)) / 3;
    CHECK(std::abs(v.real() - closed) <= 1e-14 * std::exp(std::abs(x)));
    CHECK(std::abs(v.imag()) <= 1e-15 * std::exp(std::abs(x)));
    CHECK(std::abs(exponential_sum(2, x, 1.0, 1) - std::sinh(x)) <= 1e-14 * std::exp(std::abs(x)));
  }
  for (int n = 2; n <= 6; ++n)
    for (int j = 0; j < n; ++j) CHECK(std::abs(exponential_sum(n, 0.0, cx(0.8), j) - cx(j == 0 ? 1.0 : 0.0)) <= 1e-15);
}

TEST_CASE("bessel comb series") {
  CHECK(std::abs(bessel_comb_series(2, 1.0, 1.0, 0) - 1.5430806348152437) <= 1e-14);
  for (int n = 2; n <= 5; ++n)
    for (int j = 0; j < n; ++j) CHECK(bessel_comb_series(n, 0.0, cx(0.8), j) == cx(j == 0 ? 1.0 : 0.0));
  const cx comb = bessel_comb_series(3, 2.0, 1.0, 2);
  CHECK(std::abs(comb - 2.3403922192530693) <= 1e-14);
  CHECK(std::abs(comb - trace_projection(3, 2.0, 1.0, 2)) <= 1e-10);
  CHECK(default_comb_order(3, 2.0, 1.0, 2) == 3 * 11 + 2);
  CHECK_THROWS_AS(bessel_comb_series(3, 2.0, 1.0, 0, 20), Error);
}

TEST_CASE("three forms agree") {
  for (int n = 2; n <= 6; ++n)
    for (int j = 0; j < n; ++j)
      for (double x : {0.5, 1.0, 2.0})
        for (cx w : kWs) {
          const double scale = std::exp(std::abs(x) * reach(w));
          const cx tp = trace_projection(n, x, w, j);
          CHECK(std::abs(tp - exponential_sum(n, x, w, j)) <= 1e-11 * scale);
          CHECK(std::abs(tp - bessel_comb_series(n, x, w, j)) <= 1e-9 * scale);
        }
}

TEST_CASE("projections tile every order exactly once") {
  for (int n = 2; n <= 6; ++n)
    for (cx w : kWs)
      for (double x : {0.5, 2.0}) {
        cx total(0);
        for (int j = 0; j < n; ++j) total += trace_projection(n, x, w, j);
        CHECK(std::abs(total - std::exp(x / 2 * (w + 1.0 / w))) <= 1e-9);
      }
}

TEST_CASE("argument errors") {
  try {
    generating_matrix(3, 1.0, 0.0);
    FAIL("expected invalid-argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  CHECK_THROWS_AS(generating_matrix(3, 30.0, 0.5), Error);
  CHECK_THROWS_AS(trace_projection(3, 1.0, 1.0, 3), Error);
  CHECK_THROWS_AS(exponential_sum(1, 1.0, 1.0, 0), Error);
}

}
