#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "superhyp/bessel.hpp"
#include "superhyp/cli.hpp"
#include "superhyp/genmatrix.hpp"

namespace superhyp::cli {

namespace {

using json = nlohmann::ordered_json;

json complex_json(const cx& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::vector<int> indices_or_all(const RunConfig& c, int n) {
  if (c.j) return *c.j;
  std::vector<int> all;
  for (int j = 0; j < n; ++j) all.push_back(j);
  return all;
}

void eval(const RunConfig& c, std::ostream& out) {
  const auto xs = c.x.value_or(std::vector<real>{1.0});
  const auto ws = c.w.value_or(std::vector<cx>{cx(1.0)});
  const auto ns = c.n.value_or(std::vector<int>{3});
  if (c.target == "superhyp") {
    const Method method = c.method.value_or(Method::series);
    for (int n : ns)
      for (real x : xs) {
        const SuperHypValues v = c_all(n, x, method);
        out << json{{"op", "superhyp"},
                    {"params", {{"n", n}, {"x", x}, {"method", to_string(method)}}},
                    {"values", std::vector<real>(v.values.begin(), v.values.end())}}
                   .dump()
            << '\n';
      }
  } else if (c.target == "bessel") {
    const int kmax = c.kmax.value_or(8);
    for (real x : xs) {
      const BesselTable t = bessel_table(kmax, x);
      out << json{{"op", "bessel"},
                  {"params", {{"x", x}, {"kmax", kmax}}},
                  {"values", std::vector<real>(t.values.begin(), t.values.end())},
                  {"norm_residual", t.norm_residual}}
                 .dump()
          << '\n';
    }
  } else if (c.target == "trace") {
    for (int n : ns)
      for (real x : xs)
        for (const cx& w : ws)
          for (int j : indices_or_all(c, n))
            out << json{{"op", "trace"},
                        {"params", {{"n", n}, {"x", x}, {"w", complex_json(w)}, {"j", j}}},
                        {"value", complex_json(trace_projection(n, x, w, j))}}
                       .dump()
                << '\n';
  } else if (c.target == "genmatrix") {
    for (int n : ns)
      for (real x : xs)
        for (const cx& w : ws) {
          const CMatrix m = generating_matrix(n, x, w).matrix;
          json column = json::array();
          for (int i = 0; i < n; ++i) column.push_back(complex_json(m(i, 0)));
          out << json{{"op", "genmatrix"},
                      {"params", {{"n", n}, {"x", x}, {"w", complex_json(w)}}},
                      {"first_column", column}}
                     .dump()
              << '\n';
        }
  } else {
    throw UsageError("unknown eval op '" + c.target + "' (superhyp, bessel, trace, genmatrix)");
  }
}

int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.command == "eval") {
    if (c.format != "json") throw UsageError("eval writes JSON lines only");
    eval(c, out);
    return kPass;
  }
  if (c.command == "verify") {
    if (c.format != "json") throw UsageError("verify writes a JSON report only");
    const VerificationReport report = run_verify(c);
    out << report.to_json().dump(2) << '\n';
    return report.pass ? kPass : kVerificationFailure;
  }
  if (c.command == "bench") {
    if (c.format != "json") throw UsageError("bench writes JSON only");
    json results = json::array();
    real total = 0;
    for (const BenchResult& r : run_bench(c)) {
      results.push_back({{"op", r.op}, {"n", r.n}, {"median_ms", r.median_ms}, {"samples_ms", r.samples_ms}});
      for (real s : r.samples_ms) total += s;
    }
    out << json{{"bench", c.target.empty() ? "circulant-exp" : c.target},
                {"params", c.echo()},
                {"repeats", defaults::bench_repeats},
                {"results", results},
                {"wall_time_ms", total}}
               .dump(2)
        << '\n';
    return kPass;
  }
  const Table table = build_table(c);
  if (c.format == "csv") out << to_csv(table);
  else out << to_json(table, c.target).dump(2) << '\n';
  return kPass;
}

template <class T>
T pick(const std::string& value, std::initializer_list<std::pair<const char*, T>> choices) {
  for (const auto& [name, v] : choices)
    if (value == name) return v;
  throw UsageError("unexpected value '" + value + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Pauli algebra, super hyperbolic functions and their Bessel links", "superhyp"};
  RunConfig c;
  std::string n, N, j, x, y, alpha, method, mode;
  std::vector<std::string> w;
  app.add_option("command", c.command, "eval | verify | bench | table")
      ->required()
      ->check(CLI::IsMember({"eval", "verify", "bench", "table"}));
  app.add_option("target", c.target, "op, suite or table name");
  app.add_option("--n", n, "levels: value, list or range a..b");
  app.add_option("--N", N, "lattice half-widths");
  app.add_option("--x", x, "x grid, e.g. -3..3:0.5");
  app.add_option("--y", y, "y grid");
  app.add_option("--w", w, "complex w as re,im or re; repeat for several")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--j", j, "indices");
  app.add_option("--method", method, "series | filter")->check(CLI::IsMember({"series", "filter"}));
  app.add_option("--mode", mode, "cyclic | open")->check(CLI::IsMember({"cyclic", "open"}));
  app.add_option("--alpha", alpha, "gauge offsets in [0,1)");
  app.add_option("--kmax", c.kmax, "largest Bessel order or truncation K");
  app.add_option("--tol", c.tol, "override every tolerance of the suite");
  app.add_option("--trials", c.trials, "seeded random cases per level");
  app.add_option("--seed", c.seed, "random seed")->default_val(0);
  app.add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  app.add_option("--out", c.out, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (!n.empty()) c.n = parse_int_grid(n);
    if (!N.empty()) c.N = parse_int_grid(N);
    if (!j.empty()) c.j = parse_int_grid(j);
    if (!x.empty()) c.x = parse_real_grid(x);
    if (!y.empty()) c.y = parse_real_grid(y);
    if (!alpha.empty()) c.alpha = parse_real_grid(alpha);
    if (!w.empty()) {
      c.w.emplace();
      for (const std::string& item : w) c.w->push_back(parse_complex(item));
    }
    if (!method.empty()) c.method = pick<Method>(method, {{"series", Method::series}, {"filter", Method::filter}});
    if (!mode.empty()) c.mode = pick<BoundaryMode>(mode, {{"cyclic", BoundaryMode::cyclic}, {"open", BoundaryMode::open}});
    if (c.kmax && *c.kmax < 0) throw UsageError("--kmax must be >= 0");

    std::ostringstream buffer;
    const int code = dispatch(c, buffer);
    if (c.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(c.out, std::ios::binary);
      file << buffer.str();
      if (!file.flush()) {
        err << "superhyp: cannot write '" << c.out << "'\n";
        return kUsageError;
      }
    }
    return code;
  } catch (const UsageError& e) {
    err << "superhyp: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "superhyp: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace superhyp::cli
