#include <algorithm>
#include <charconv>

#include "superhyp/bessel.hpp"
#include "superhyp/cli.hpp"

namespace superhyp::cli {

namespace {

int single(const std::optional<std::vector<int>>& grid, const char* flag, int fallback) {
  if (!grid) return fallback;
  if (grid->size() != 1) throw UsageError(std::string("table takes a single ") + flag);
  return grid->front();
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
      continue;
    }
    any = true;
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += ch;
    }
  }
  if (quoted) throw UsageError("unterminated quoted CSV field");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

Table build_table(const RunConfig& c) {
  Table t;
  if (c.target == "superhyp") {
    const int n = single(c.n, "--n", 3);
    require_level(n);
    const Method method = c.method.value_or(Method::series);
    t.columns.push_back("x");
    for (int j = 0; j < n; ++j) t.columns.push_back("c" + std::to_string(j));
    for (real x : c.x.value_or(parse_real_grid("-3..3:0.5"))) {
      const SuperHypValues v = c_all(n, x, method);
      std::vector<real> row{x};
      row.insert(row.end(), v.values.begin(), v.values.end());
      t.rows.push_back(std::move(row));
    }
  } else if (c.target == "identity") {
    const int n = single(c.n, "--n", 3);
    t.columns = {"x", "residual"};
    for (real x : c.x.value_or(parse_real_grid("-3..3:0.5"))) t.rows.push_back({x, fundamental_identity_residual(n, x)});
  } else if (c.target == "bessel") {
    const int kmax = c.kmax.value_or(8);
    t.columns.push_back("x");
    for (int k = 0; k <= kmax; ++k) t.columns.push_back("I" + std::to_string(k));
    for (real x : c.x.value_or(parse_real_grid("0..5:0.5"))) {
      const BesselTable b = bessel_table(kmax, x);
      std::vector<real> row{x};
      row.insert(row.end(), b.values.begin(), b.values.end());
      t.rows.push_back(std::move(row));
    }
  } else {
    throw UsageError("unknown table '" + c.target + "' (superhyp, identity, bessel)");
  }
  std::stable_sort(t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return t;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out += (i ? "," : "") + quote(table.columns[i]);
  out += "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_real(row[i]);
    out += "\r\n";
  }
  return out;
}

Table parse_csv(std::string_view text) {
  const auto records = csv_records(text);
  if (records.empty()) throw UsageError("CSV has no header");
  Table t;
  t.columns = records.front();
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.columns.size()) throw UsageError("CSV row width differs from header");
    std::vector<real> row;
    for (const std::string& field : records[r]) {
      real value = 0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || end != field.data() + field.size()) throw UsageError("bad CSV number '" + field + "'");
      row.push_back(value);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

nlohmann::ordered_json to_json(const Table& table, std::string_view name) {
  return {{"table", name}, {"columns", table.columns}, {"rows", table.rows}};
}

}  // namespace superhyp::cli
