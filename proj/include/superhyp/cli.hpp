#ifndef SUPERHYP_CLI_HPP
#define SUPERHYP_CLI_HPP

// Front end shared by the superhyp executable and the tests:
//
//   superhyp <eval|verify|bench|table> [suite/op] [flags]
//
// Grids are written a..b:step (both ends included when the step divides the
// span), a..b (unit step), or a comma list. Complex w is re,im or a plain real.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superhyp/circle.hpp"
#include "superhyp/core.hpp"
#include "superhyp/superhyp.hpp"

namespace superhyp::cli {

enum ExitCode { kPass = 0, kVerificationFailure = 1, kUsageError = 2, kDomainError = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default tolerance of every verification check. Scaled entries are
// multiplied by the case scale recorded next to them in the report.
namespace tolerance {
inline constexpr real pauli = 1e-12;
inline constexpr real determinant = 1e-9;
inline constexpr real printed_identity = 1e-10;
inline constexpr real printed_vs_determinant = 1e-10;
inline constexpr real cross_method = 1e-10;       // times e^{|x|}
inline constexpr real addition = 1e-10;
inline constexpr real mixed = 1e-10;              // times e^{|x|+|y|}
inline constexpr real bessel_classic = 1e-10;     // times e^{|x|}
inline constexpr real bessel_recurrence = 1e-9;   // relative
inline constexpr real generating_function = 1e-10;  // times e^{2|x|}
inline constexpr real three_way = 1e-9;
inline constexpr real order_classes = 1e-12;      // times e^{|x| max(|w|,1/|w|)}
inline constexpr real exact = 0;
inline constexpr real clock_spectrum = 1e-12;
inline constexpr real fold = 1e-10;
inline constexpr real convergence = 1e-8;
}  // namespace tolerance

// Fixed sizes of the default grids and studies.
namespace defaults {
inline constexpr int addition_trials = 100;
inline constexpr int mixed_trials = 50;
inline constexpr real random_half_width = 3.0;
inline constexpr int bessel_order = 80;
inline constexpr int recurrence_orders = 20;
inline constexpr int bench_repeats = 5;
inline const std::vector<int> convergence_N{10, 20, 40};
inline constexpr int convergence_max_order = 5;
}  // namespace defaults

std::vector<real> parse_real_grid(std::string_view text);
std::vector<int> parse_int_grid(std::string_view text);
cx parse_complex(std::string_view text);

/// Shortest decimal string that reads back to the same double.
std::string format_real(real value);

struct RunConfig {
  std::string command;
  std::string target;
  std::optional<std::vector<int>> n, N, j;
  std::optional<std::vector<real>> x, y, alpha;
  std::optional<std::vector<cx>> w;
  std::optional<Method> method;
  std::optional<BoundaryMode> mode;
  std::optional<int> kmax;
  std::optional<real> tol;
  std::optional<int> trials;
  unsigned long long seed = 0;
  std::string format = "json";
  std::string out;

  nlohmann::ordered_json echo() const;
};

struct Case {
  std::string check;
  std::vector<std::pair<std::string, real>> params;
  real residual = 0;
  real tolerance = 0;
  bool pass = false;
  nlohmann::ordered_json detail;  // null when there is nothing to add
};

struct VerificationReport {
  std::string suite;
  nlohmann::ordered_json params;
  std::vector<Case> cases;
  real max_residual = 0;
  bool pass = true;
  real wall_time_ms = 0;

  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite. Unknown suites raise UsageError, library failures Error.
VerificationReport run_verify(const RunConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<real>> rows;
};

Table build_table(const RunConfig& config);
std::string to_csv(const Table& table);
Table parse_csv(std::string_view text);
nlohmann::ordered_json to_json(const Table& table, std::string_view name);

struct BenchResult {
  std::string op;
  int n = 0;
  std::vector<real> samples_ms;
  real median_ms = 0;
};

std::vector<BenchResult> run_bench(const RunConfig& config);

/// Full command line handling; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superhyp::cli

#endif  // SUPERHYP_CLI_HPP
