#include <charconv>
#include <cmath>
#include <limits>

#include "superhyp/cli.hpp"

namespace superhyp::cli {

namespace {

constexpr long long kMaxGridPoints = 1000000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw UsageError("not a number: '" + std::string(text) + "'");
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw UsageError("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
std::vector<T> parse_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw UsageError("empty grid");
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    std::vector<T> values;
    for (std::string_view part : split(text, ',')) values.push_back(parse_number<T>(part));
    return values;
  }

  const T a = parse_number<T>(text.substr(0, dots));
  std::string_view rest = text.substr(dots + 2);
  T step = 1;
  if (const std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
    step = parse_number<T>(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  const T b = parse_number<T>(rest);
  if (!(step > 0)) throw UsageError("grid step must be positive");
  if (b < a) throw UsageError("grid end lies below its start");

  const double span = (static_cast<double>(b) - static_cast<double>(a)) / static_cast<double>(step);
  const double nearest = std::round(span);
  const bool lands_on_end = std::abs(span - nearest) <= 1e-9;
  const double intervals = lands_on_end ? nearest : std::floor(span);
  if (intervals + 1 > kMaxGridPoints) throw UsageError("grid has too many points");

  std::vector<T> values;
  const long long count = static_cast<long long>(intervals) + 1;
  values.reserve(count);
  for (long long i = 0; i < count; ++i) values.push_back(static_cast<T>(a + static_cast<T>(i) * step));
  if (lands_on_end) values.back() = b;
  return values;
}

}  // namespace

std::vector<real> parse_real_grid(std::string_view text) { return parse_grid<real>(text); }

std::vector<int> parse_int_grid(std::string_view text) { return parse_grid<int>(text); }

cx parse_complex(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() == 1) return {parse_number<real>(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_number<real>(parts[0]), parse_number<real>(parts[1])};
  throw UsageError("complex value must be 're,im' or 're': '" + std::string(text) + "'");
}

std::string format_real(real value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

nlohmann::ordered_json RunConfig::echo() const {
  nlohmann::ordered_json j_out = nlohmann::ordered_json::object();
  const auto put = [&](const char* key, const auto& opt) {
    if (opt) j_out[key] = *opt;
  };
  put("n", n);
  put("N", N);
  put("x", x);
  put("y", y);
  if (w) {
    auto list = nlohmann::ordered_json::array();
    for (const cx& value : *w) list.push_back({{"re", value.real()}, {"im", value.imag()}});
    j_out["w"] = list;
  }
  put("j", j);
  if (method) j_out["method"] = std::string(to_string(*method));
  if (mode) j_out["mode"] = std::string(to_string(*mode));
  put("alpha", alpha);
  put("kmax", kmax);
  put("tol", tol);
  put("trials", trials);
  j_out["seed"] = seed;
  return j_out;
}

}  // namespace superhyp::cli
