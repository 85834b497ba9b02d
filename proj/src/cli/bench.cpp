#include <algorithm>
#include <chrono>

#include "superhyp/algebra.hpp"
#include "superhyp/cli.hpp"

namespace superhyp::cli {

namespace {

template <class F>
real time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<real, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<BenchResult> run_bench(const RunConfig& c) {
  std::vector<std::string> ops{"circulant-exp-spectral", "circulant-exp-dense"};
  if (!c.target.empty()) {
    if (std::find(ops.begin(), ops.end(), c.target) == ops.end())
      throw UsageError("unknown bench op '" + c.target + "' (circulant-exp-spectral, circulant-exp-dense)");
    ops = {c.target};
  }
  if (c.x && c.x->size() != 1) throw UsageError("bench takes a single --x");
  const real x = c.x ? c.x->front() : 1.0;

  std::vector<BenchResult> results;
  for (int n : c.n.value_or(std::vector<int>{4, 64, 256}))
    for (const std::string& op : ops) {
      require_level(n);
      BenchResult r{op, n, {}, 0};
      real sink = 0;
      for (int rep = 0; rep < defaults::bench_repeats; ++rep) {
        r.samples_ms.push_back(time_ms([&] {
          const CMatrix m = op == "circulant-exp-spectral" ? exp_circulant(n, x)
                                                           : mat_exp(CMatrix(x * shift_matrix(n)));
          sink += std::abs(m(0, 0));
        }));
      }
      if (!(sink > 0)) throw Error(ErrorCode::invariant_violation, "benchmark produced a zero diagonal");
      std::vector<real> sorted = r.samples_ms;
      std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
      r.median_ms = sorted[sorted.size() / 2];
      results.push_back(std::move(r));
    }
  return results;
}

}  // namespace superhyp::cli
