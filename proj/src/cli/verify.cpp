#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "superhyp/algebra.hpp"
#include "superhyp/bessel.hpp"
#include "superhyp/cli.hpp"
#include "superhyp/genmatrix.hpp"

namespace superhyp::cli {

namespace {

using Params = std::vector<std::pair<std::string, real>>;
using json = nlohmann::ordered_json;

class CaseList {
 public:
  explicit CaseList(std::optional<real> override_tol) : override_(override_tol) {}

  void add(std::string check, Params params, real residual, real base_tol, real scale = 1, json detail = nullptr) {
    const real tol = (override_ ? *override_ : base_tol) * scale;
    cases_.push_back({std::move(check), std::move(params), residual, tol, residual <= tol, std::move(detail)});
  }

  std::vector<Case> take() { return std::move(cases_); }

 private:
  std::optional<real> override_;
  std::vector<Case> cases_;
};

// Uniform on [-h, h) from the top 53 bits; independent of the standard
// library's distribution implementations, so seeds reproduce everywhere.
class Draws {
 public:
  explicit Draws(unsigned long long seed) : engine_(seed) {}
  real next(real h) { return -h + 2 * h * (static_cast<real>(engine_() >> 11) * 0x1.0p-53); }

 private:
  std::mt19937_64 engine_;
};

std::vector<cx> default_ws() { return {cx(1.0), cx(0.8), std::polar(1.0, std::numbers::pi / 5)}; }

real reach(cx w) { return std::max(std::abs(w), 1 / std::abs(w)); }

std::vector<Method> methods(const RunConfig& c) {
  if (c.method) return {*c.method};
  return {Method::series, Method::filter};
}

std::vector<std::pair<real, real>> pairs(const RunConfig& c, int trials, Draws& draws) {
  std::vector<std::pair<real, real>> out;
  if (c.x && c.y) {
    for (real x : *c.x)
      for (real y : *c.y) out.emplace_back(x, y);
    return out;
  }
  if (c.x || c.y) throw UsageError("give both --x and --y, or neither for seeded random pairs");
  for (int t = 0; t < trials; ++t) {
    const real x = draws.next(defaults::random_half_width);
    out.emplace_back(x, draws.next(defaults::random_half_width));
  }
  return out;
}

int trials_of(const RunConfig& c, int fallback) {
  const int t = c.trials.value_or(fallback);
  if (t < 1) throw UsageError("--trials must be >= 1");
  return t;
}

void suite_pauli(const RunConfig& c, CaseList& cases) {
  for (int n : c.n.value_or(parse_int_grid("2..16"))) {
    require_level(n);
    const PauliContext ctx{n, primitive_root(n), shift_matrix(n), clock_matrix(n), dft_matrix(n)};
    const PauliResiduals r = ctx.residuals();
    json detail = {{"root_power", r.root_power},       {"root_sum", r.root_sum},
                   {"shift_power", r.shift_power},     {"clock_power", r.clock_power},
                   {"shift_adjoint", r.shift_adjoint}, {"commutation", r.commutation},
                   {"unitarity", r.unitarity},         {"diagonalization", r.diagonalization}};
    cases.add("pauli", {{"n", n}}, r.max(), tolerance::pauli, 1, std::move(detail));
  }
}

void suite_superhyp(const RunConfig& c, CaseList& cases) {
  const auto xs = c.x.value_or(parse_real_grid("-3,-1.5,0,0.7,1.3,3"));
  for (int n : c.n.value_or(parse_int_grid("2..8")))
    for (real x : xs) {
      const real det_residual = fundamental_identity_residual(n, x);
      cases.add("determinant", {{"n", n}, {"x", x}}, det_residual, tolerance::determinant);

      real worst = 0;
      for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(c_series(n, j, x) - c_filter(n, j, x)));
      cases.add("cross-method", {{"n", n}, {"x", x}}, worst, tolerance::cross_method, std::exp(std::abs(x)));

      if (n > 4) continue;
      const cx det = determinant(exp_circulant(n, x));
      for (Method m : methods(c)) {
        const SuperHypValues v = c_all(n, x, m);
        const real printed = evaluate_printed_identity(n, std::span<const real>(v.values.data(), n));
        const std::string tag(to_string(m));
        cases.add("printed-identity/" + tag, {{"n", n}, {"x", x}}, std::abs(printed - 1), tolerance::printed_identity);
        cases.add("printed-vs-determinant/" + tag, {{"n", n}, {"x", x}}, std::abs(cx(printed) - det),
                  tolerance::printed_vs_determinant);
      }
    }
}

void suite_addition(const RunConfig& c, CaseList& cases) {
  Draws draws(c.seed);
  const int trials = trials_of(c, defaults::addition_trials);
  const Method method = c.method.value_or(Method::series);
  for (int n : c.n.value_or(parse_int_grid("2..8")))
    for (const auto& [x, y] : pairs(c, trials, draws)) {
      const std::vector<real> r = addition_residual(n, x, y, method);
      cases.add("addition", {{"n", n}, {"x", x}, {"y", y}}, *std::max_element(r.begin(), r.end()), tolerance::addition);
    }
}

void suite_mixed(const RunConfig& c, CaseList& cases) {
  Draws draws(c.seed);
  const int trials = trials_of(c, defaults::mixed_trials);
  const Method method = c.method.value_or(Method::series);
  for (int n : c.n.value_or(parse_int_grid("2..6"))) {
    require_level(n);
    std::vector<int> js;
    if (c.j) js = *c.j;
    else
      for (int j = 0; j < n; ++j) js.push_back(j);
    for (const auto& [x, y] : pairs(c, trials, draws)) {
      const real scale = std::exp(std::abs(x) + std::abs(y));
      // Coefficient extraction: the left side is entry (j, 0) of e^{x S} e^{y S^dagger}.
      const CMatrix product = exp_circulant(n, x) * exp_circulant(n, y).adjoint();
      for (int j : js) {
        const MixedResidual r = mixed_product_residual(n, x, y, j, method);
        const Params p{{"n", n}, {"j", j}, {"x", x}, {"y", y}};
        cases.add("mixed", p, r.residual, tolerance::mixed, scale);
        cases.add("mixed-matrix", p, std::abs(cx(r.lhs) - product(j, 0)), tolerance::mixed, scale);
      }
    }
  }
}

void suite_bessel(const RunConfig& c, CaseList& cases) {
  const int K = c.kmax.value_or(defaults::bessel_order);
  const auto ws = c.w.value_or(default_ws());
  for (real x : c.x.value_or(parse_real_grid("0.5,1,5,10"))) {
    const ClassicResiduals r = classic_identity_residuals(x, K);
    json detail = {{"unity", r.unity}, {"exp_plus", r.exp_plus}, {"exp_minus", r.exp_minus},
                   {"cosh", r.cosh},   {"sinh", r.sinh}};
    cases.add("classic", {{"x", x}, {"K", K}}, r.max(), tolerance::bessel_classic, std::exp(std::abs(x)),
              std::move(detail));

    if (x != 0) {
      real worst = 0;
      for (int k = 1; k <= defaults::recurrence_orders; ++k) {
        const real lhs = bessel_i(k - 1, x) - bessel_i(k + 1, x);
        const real rhs = (2.0 * k / x) * bessel_i(k, x);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
      }
      cases.add("recurrence", {{"x", x}}, worst, tolerance::bessel_recurrence);
    }

    for (const cx& w : ws)
      cases.add("generating-function", {{"x", x}, {"w_re", w.real()}, {"w_im", w.imag()}, {"K", K}},
                generating_function_residual(x, w, K), tolerance::generating_function, std::exp(2 * std::abs(x)));
  }
}

void suite_genmatrix(const RunConfig& c, CaseList& cases) {
  const auto xs = c.x.value_or(parse_real_grid("0.5,1,2"));
  const auto ws = c.w.value_or(default_ws());
  for (int n : c.n.value_or(parse_int_grid("2..6")))
    for (real x : xs)
      for (const cx& w : ws) {
        const CMatrix m = generating_matrix(n, x, w).matrix;
        for (int j = 0; j < n; ++j) {
          if (c.j && std::find(c.j->begin(), c.j->end(), j) == c.j->end()) continue;
          const cx tp = trace_projection(n, x, w, j);
          const cx es = exponential_sum(n, x, w, j);
          const cx bc = bessel_comb_series(n, x, w, j);
          const real spread = std::max({std::abs(tp - es), std::abs(tp - bc), std::abs(es - bc)});
          const Params p{{"n", n}, {"j", j}, {"x", x}, {"w_re", w.real()}, {"w_im", w.imag()}};
          json detail = {{"trace", {{"re", tp.real()}, {"im", tp.imag()}}}};
          cases.add("three-way", p, spread, tolerance::three_way, 1, std::move(detail));
          // Projection j collects the orders congruent to -j, which sit in row -j mod n of column 0.
          cases.add("order-classes", p, std::abs(tp - m(mod(-j, n), 0)), tolerance::order_classes,
                    std::exp(std::abs(x) * reach(w)));
        }
      }
}

void suite_circle(const RunConfig& c, CaseList& cases) {
  const auto Ns = c.N.value_or(std::vector<int>{1, 2, 5, 20});
  std::vector<BoundaryMode> modes{BoundaryMode::cyclic, BoundaryMode::open};
  if (c.mode) modes = {*c.mode};
  const auto alphas = c.alpha.value_or(std::vector<real>{0.0, 0.25, 0.7});

  for (int N : Ns)
    for (BoundaryMode mode : modes) {
      const std::string tag(to_string(mode));
      const int n = 2 * N + 1;
      const LatticeOperators base = build_lattice(N, mode, 0.0);
      const CommutatorDefect d = commutator_check(base);
      json entries = json::array();
      for (const DefectEntry& e : d.nonzero) entries.push_back({{"row", e.row}, {"col", e.col}, {"value", e.value}});
      json detail = {{"nonzero", entries}, {"congruent", d.congruent}};
      if (mode == BoundaryMode::cyclic && !d.nonzero.empty()) detail["corner_defect"] = d.nonzero.front().value;
      cases.add("commutator/" + tag, {{"N", N}}, d.matches_expected ? 0.0 : 1.0, tolerance::exact, 1,
                std::move(detail));

      for (real alpha : alphas) {
        const LatticeOperators ops = build_lattice(N, mode, alpha);
        const CommutatorDefect da = commutator_check(ops);
        const real mismatch = (da.defect == d.defect && da.nonzero == d.nonzero) ? 0.0 : 1.0;
        cases.add("gauge/" + tag, {{"N", N}, {"alpha", alpha}}, mismatch + da.gauge_term, tolerance::exact);
        if (mode == BoundaryMode::cyclic) {
          const cx phase = std::polar(1.0, 2 * std::numbers::pi * alpha / n);
          real worst = 0;
          for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(ops.sigma3(i, i) - root_of_unity(n, i - N) * phase));
          cases.add("clock-spectrum", {{"N", N}, {"alpha", alpha}}, worst, tolerance::clock_spectrum);
        }
      }

      IMatrix expected = IMatrix::Identity(n, n);
      if (mode == BoundaryMode::open) expected(n - 1, n - 1) = 0;
      const IMatrix gram = base.S.transpose() * base.S;
      cases.add("unitarity/" + tag, {{"N", N}}, (gram - expected).cwiseAbs().maxCoeff(), tolerance::exact);

      if (mode == BoundaryMode::cyclic) {
        for (real x : c.x.value_or(std::vector<real>{1.5}))
          for (const cx& w : c.w.value_or(std::vector<cx>{cx(1.0)})) {
            const CMatrix op = generating_operator(N, x, w, BoundaryMode::cyclic);
            const CMatrix fin = generating_matrix(n, x, w).matrix;
            real worst = 0;
            for (int m = -N; m <= N; ++m) worst = std::max(worst, std::abs(op(m + N, N) - fin(mod(m, n), 0)));
            cases.add("fold", {{"N", N}, {"x", x}, {"w_re", w.real()}, {"w_im", w.imag()}}, worst, tolerance::fold);
          }
      }
    }

  if (std::find(modes.begin(), modes.end(), BoundaryMode::open) == modes.end()) return;
  std::vector<int> orders;
  for (int o = -defaults::convergence_max_order; o <= defaults::convergence_max_order; ++o) orders.push_back(o);
  const auto& studyN = defaults::convergence_N;
  for (real x : c.x.value_or(std::vector<real>{0.5, 1.0, 2.0}))
    for (const cx& w : c.w.value_or(std::vector<cx>{cx(1.0)})) {
      const auto runs = convergence_study(studyN, x, w, orders);
      for (std::size_t o = 0; o < orders.size(); ++o) {
        const auto& run = runs[o];
        const Params p{{"order", orders[o]}, {"x", x}, {"w_re", w.real()}, {"w_im", w.imag()}};
        json errors = json::array();
        real increase = 0;
        for (std::size_t i = 0; i < run.size(); ++i) {
          errors.push_back({{"N", run[i].N}, {"error", run[i].error}, {"boundary_dominated", run[i].boundary_dominated}});
          if (i > 0) increase = std::max(increase, run[i].error - run[i - 1].error);
        }
        cases.add("convergence", p, run.back().error, tolerance::convergence, 1, json{{"errors", errors}});
        cases.add("convergence-monotone", p, increase, tolerance::exact);
      }
    }
}

bool canonical_less(const Case& a, const Case& b) {
  if (a.check != b.check) return a.check < b.check;
  return std::lexicographical_compare(a.params.begin(), a.params.end(), b.params.begin(), b.params.end());
}

json case_json(const Case& c) {
  json params = json::object();
  for (const auto& [key, value] : c.params) params[key] = value;
  json out = {{"check", c.check}, {"params", params}, {"residual", c.residual},
              {"tolerance", c.tolerance}, {"pass", c.pass}};
  if (!c.detail.is_null()) out["detail"] = c.detail;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"pauli", "superhyp", "addition", "mixed", "bessel", "genmatrix", "circle"};
  return names;
}

VerificationReport run_verify(const RunConfig& config) {
  using Runner = void (*)(const RunConfig&, CaseList&);
  static const std::pair<const char*, Runner> runners[] = {
      {"pauli", suite_pauli},   {"superhyp", suite_superhyp},   {"addition", suite_addition}, {"mixed", suite_mixed},
      {"bessel", suite_bessel}, {"genmatrix", suite_genmatrix}, {"circle", suite_circle},
  };
  const auto found = std::find_if(std::begin(runners), std::end(runners),
                                  [&](const auto& r) { return config.target == r.first; });
  if (found == std::end(runners)) throw UsageError("unknown suite '" + config.target + "'");
  if (config.tol && !(*config.tol > 0)) throw UsageError("--tol must be positive");

  const auto start = std::chrono::steady_clock::now();
  CaseList cases(config.tol);
  found->second(config, cases);

  VerificationReport report;
  report.suite = config.target;
  report.params = config.echo();
  report.cases = cases.take();
  std::stable_sort(report.cases.begin(), report.cases.end(), canonical_less);
  for (const Case& c : report.cases) {
    report.pass = report.pass && c.pass;
    if (!(c.residual <= report.max_residual)) report.max_residual = c.residual;
  }
  if (report.cases.empty()) throw UsageError("the requested grid produced no cases");
  report.wall_time_ms = std::chrono::duration<real, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  json list = json::array();
  for (const Case& c : cases) list.push_back(case_json(c));
  return {{"suite", suite},         {"params", params}, {"pass", pass}, {"max_residual", max_residual},
          {"case_count", cases.size()}, {"cases", list},   {"wall_time_ms", wall_time_ms}};
}

}  // namespace superhyp::cli
