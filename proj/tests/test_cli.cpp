#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "superhyp/cli.hpp"

using namespace superhyp;
using namespace superhyp::cli;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "superhyp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Drops the timing fields, which are outside the determinism guarantee.
std::string canon(const std::string& text) {
  json doc = json::parse(text);
  doc.erase("wall_time_ms");
  return doc.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("grid syntax") {
  const auto xs = parse_real_grid("-3..3:0.5");
  REQUIRE(xs.size() == 13);
  CHECK(xs.front() == -3.0);
  CHECK(xs[6] == 0.0);
  CHECK(xs.back() == 3.0);
  CHECK(parse_real_grid("0..1:0.3").size() == 4);
  CHECK(parse_real_grid("0..1:0.1").back() == 1.0);
  CHECK(parse_real_grid("0.5, 1,5") == std::vector<real>{0.5, 1, 5});
  CHECK(parse_real_grid("2") == std::vector<real>{2});
  CHECK(parse_int_grid("2..8") == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
  CHECK(parse_int_grid("1..7:3") == std::vector<int>{1, 4, 7});
  CHECK(parse_int_grid("4,256") == std::vector<int>{4, 256});
  CHECK_THROWS_AS(parse_real_grid("1..0"), UsageError);
  CHECK_THROWS_AS(parse_real_grid("0..1:0"), UsageError);
  CHECK_THROWS_AS(parse_real_grid("abc"), UsageError);
  CHECK_THROWS_AS(parse_real_grid(""), UsageError);
  CHECK_THROWS_AS(parse_int_grid("1.5"), UsageError);
}

TEST_CASE("complex values") {
  CHECK(parse_complex("1") == cx(1, 0));
  CHECK(parse_complex("0.8,-0.25") == cx(0.8, -0.25));
  CHECK_THROWS_AS(parse_complex("1,2,3"), UsageError);
}

TEST_CASE("shortest round-trip formatting") {
  for (real v : {0.1, 1.0 / 3, std::numbers::pi, 1e-300, -2.5e17, 4.53883474958866})
    CHECK(parse_real_grid(format_real(v)).front() == v);
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(-3.0) == "-3");
}

TEST_CASE("eval examples") {
  const Outcome sh = invoke({"eval", "superhyp", "--n", "3", "--x", "1", "--method", "filter"});
  REQUIRE(sh.code == kPass);
  const json line = json::parse(sh.out);
  CHECK(line["op"] == "superhyp");
  REQUIRE(line["values"].size() == 3);
  real sum = 0;
  for (const auto& v : line["values"]) sum += v.get<real>();
  CHECK(std::abs(sum - std::numbers::e) <= 1e-14);

  const json bessel = json::parse(invoke({"eval", "bessel", "--x", "0", "--kmax", "4"}).out);
  CHECK(bessel["values"] == json::array({1.0, 0.0, 0.0, 0.0, 0.0}));

  const json trace = json::parse(invoke({"eval", "trace", "--n", "2", "--x", "1", "--w", "1", "--j", "0"}).out);
  CHECK(std::abs(trace["value"]["re"].get<real>() - 1.5430806348152437) <= 1e-15);
  CHECK(trace["value"]["im"].get<real>() == 0.0);

  // One JSON object per line.
  const Outcome many = invoke({"eval", "superhyp", "--n", "2..4", "--x", "0,1"});
  std::istringstream lines(many.out);
  int count = 0;
  for (std::string l; std::getline(lines, l); ++count) CHECK(json::parse(l).is_object());
  CHECK(count == 6);
}

TEST_CASE("verify examples") {
  const Outcome sh = invoke({"verify", "superhyp", "--n", "2..8", "--x", "-3..3:0.5"});
  CHECK(sh.code == kPass);
  const json report = json::parse(sh.out);
  CHECK(report["pass"] == true);
  CHECK(report["max_residual"].get<real>() <= 1e-9);

  const Outcome circle = invoke({"verify", "circle", "--N", "2", "--mode", "cyclic"});
  CHECK(circle.code == kPass);
  bool reported = false;
  const json circle_report = json::parse(circle.out);
  for (const auto& c : circle_report["cases"])
    if (c["check"] == "commutator/cyclic") reported = c["detail"]["corner_defect"] == -5;
  CHECK(reported);

  CHECK(invoke({"verify", "addition", "--n", "5", "--trials", "100", "--seed", "0"}).code == kPass);
}

TEST_CASE("every suite passes at its defaults") {
  for (const std::string& suite : suite_names()) {
    CAPTURE(suite);
    const Outcome o = invoke({"verify", suite});
    CHECK(o.code == kPass);
    const json report = json::parse(o.out);
    CHECK(report["suite"] == suite);
    CHECK(report["case_count"].get<int>() > 0);
    real worst = 0;
    bool all = true;
    for (const auto& c : report["cases"]) {
      worst = std::max(worst, c["residual"].get<real>());
      all = all && c["pass"].get<bool>();
    }
    CHECK(report["max_residual"].get<real>() == worst);
    CHECK(report["pass"].get<bool>() == all);
  }
}

TEST_CASE("reports are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "addition", "--n", "3,5", "--trials", "20", "--seed", "7"},
        std::vector<std::string>{"verify", "mixed", "--n", "3", "--trials", "10"},
        std::vector<std::string>{"verify", "genmatrix", "--n", "2..4"}}) {
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    CHECK(canon(a.out) == canon(b.out));
  }
  const Outcome s0 = invoke({"verify", "addition", "--n", "3", "--trials", "5", "--seed", "0"});
  const Outcome s1 = invoke({"verify", "addition", "--n", "3", "--trials", "5", "--seed", "1"});
  CHECK(canon(s0.out) != canon(s1.out));
}

TEST_CASE("cases are sorted by canonical key") {
  const json report = json::parse(invoke({"verify", "superhyp", "--n", "4,2,3", "--x", "1,-1"}).out);
  std::vector<std::pair<std::string, std::vector<real>>> keys;
  for (const auto& c : report["cases"]) {
    std::vector<real> values;
    for (const auto& [k, v] : c["params"].items()) values.push_back(v.get<real>());
    keys.emplace_back(c["check"].get<std::string>(), values);
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("exit codes") {
  // A tolerance no residual can meet must turn into a failing exit code.
  for (const std::string& suite : {"superhyp", "bessel", "genmatrix", "addition"}) {
    const Outcome o = invoke({"verify", suite, "--tol", "1e-30"});
    CHECK(o.code == kVerificationFailure);
    CHECK(json::parse(o.out)["pass"] == false);
  }
  CHECK(invoke({"verify", "nosuch"}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"verify", "superhyp", "--x", "1..0"}).code == kUsageError);
  CHECK(invoke({"verify", "superhyp", "--tol", "-1"}).code == kUsageError);
  CHECK(invoke({"eval", "superhyp", "--method", "euler"}).code == kUsageError);
  CHECK(invoke({"eval", "superhyp", "--format", "csv"}).code == kUsageError);
  CHECK(invoke({"table", "bessel", "--out", "/nonexistent/dir/t.csv"}).code == kUsageError);
  CHECK(invoke({"eval", "superhyp", "--x", "800"}).code == kDomainError);
  CHECK(invoke({"verify", "circle", "--N", "2", "--alpha", "1.5"}).code == kDomainError);
  CHECK(invoke({"--help"}).code == kPass);
}

TEST_CASE("table examples") {
  const Outcome sh = invoke({"table", "superhyp", "--n", "4", "--x", "-3..3:0.5", "--format", "csv"});
  REQUIRE(sh.code == kPass);
  const Table t = parse_csv(sh.out);
  CHECK(t.columns == std::vector<std::string>{"x", "c0", "c1", "c2", "c3"});
  CHECK(t.rows.size() == 13);
  for (const auto& row : t.rows) CHECK(row.size() == 5);
  CHECK(sh.out.find("\r\n") != std::string::npos);

  const Table id = parse_csv(invoke({"table", "identity", "--n", "3", "--x", "0..2:0.25", "--format", "csv"}).out);
  CHECK(id.rows.size() == 9);
  for (const auto& row : id.rows) CHECK(row[1] <= 1e-11);

  const json bessel = json::parse(invoke({"table", "bessel", "--x", "1", "--kmax", "8", "--format", "json"}).out);
  const auto& row = bessel["rows"][0];
  REQUIRE(row.size() == 10);  // x followed by I_0..I_8
  for (std::size_t k = 2; k < row.size(); ++k) CHECK(row[k].get<real>() < row[k - 1].get<real>());
}

TEST_CASE("CSV round trip") {
  RunConfig config;
  config.command = "table";
  for (const char* name : {"superhyp", "identity", "bessel"}) {
    config.target = name;
    config.x = parse_real_grid("-2.5..3:0.37");
    const Table built = build_table(config);
    const Table back = parse_csv(to_csv(built));
    CHECK(back.columns == built.columns);
    CHECK(back.rows == built.rows);  // bit-identical
  }
  const Table quoted = parse_csv("\"a,b\",\"say \"\"hi\"\"\"\r\n1,2\r\n");
  CHECK(quoted.columns == std::vector<std::string>{"a,b", "say \"hi\""});
  CHECK(quoted.rows == std::vector<std::vector<real>>{{1, 2}});
}

TEST_CASE("bench") {
  const Outcome o = invoke({"bench", "--n", "4"});
  REQUIRE(o.code == kPass);
  const json doc = json::parse(o.out);
  REQUIRE(doc["results"].size() == 2);
  for (const auto& r : doc["results"]) CHECK(r["samples_ms"].size() == 5);
  CHECK(invoke({"bench", "circulant-exp-euler"}).code == kUsageError);
}

}
