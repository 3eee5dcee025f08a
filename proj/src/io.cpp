#include "qhhl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "tokens.hpp"

namespace qhhl {

RMatrix load_matrix(const std::string& path) {
  detail::TokenStream ts(path);
  ts.expect_keyword("dim");
  const long long n = ts.next_int("matrix size after 'dim'");
  if (n < 1)
    throw ParseError(path, ts.line(), "matrix size must be positive");
  RMatrix m(n, n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) m(i, j) = ts.next_real("matrix entry");
  ts.expect_done();
  return m;
}

RVector load_vector(const std::string& path) {
  detail::TokenStream ts(path);
  ts.expect_keyword("dim");
  const long long n = ts.next_int("vector length after 'dim'");
  if (n < 1)
    throw ParseError(path, ts.line(), "vector length must be positive");
  RVector v(n);
  for (long long i = 0; i < n; ++i) v(i) = ts.next_real("vector entry");
  ts.expect_done();
  return v;
}

double round_to(double x, int decimals) {
  if (decimals < 0) return x;
  const double scale = std::pow(10.0, decimals);
  const double y = x * scale;
  // Round half away from zero, stabilized against values that sit a hair
  // below .5 due to the scaling multiply.
  double r = std::floor(std::fabs(y) + 0.5);
  if (std::fabs(y) + 0.5 - r >= 1.0) r -= 1.0; // paranoia for huge y
  r = std::copysign(r, y);
  const double out = r / scale;
  return out == 0.0 ? 0.0 : out; // normalize -0
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  if (decimals < 0) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(x)));
    return buf;
  }
  const double r = round_to(x, decimals);
  std::snprintf(buf, sizeof buf, "%.*f", decimals, r);
  std::string s(buf);
  if (s == std::string("-0.") + std::string(static_cast<size_t>(decimals), '0') ||
      s == "-0")
    s.erase(0, 1);
  return s;
}

void Table::add_row(std::vector<double> values, std::string error) {
  if (values.size() != columns.size())
    throw ConfigError("table: row width does not match column count");
  rows.push_back(std::move(values));
  row_errors.push_back(std::move(error));
}

bool Table::any_error() const {
  for (const auto& e : row_errors)
    if (!e.empty()) return true;
  return false;
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
} // namespace

std::string to_csv(const Table& table) {
  const bool with_errors = table.any_error();
  std::string out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(table.columns[c].name);
  }
  if (with_errors) out += ",error";
  out += '\n';
  for (size_t r = 0; r < table.rows.size(); ++r) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += format_fixed(table.rows[r][c], table.columns[c].decimals);
    }
    if (with_errors) {
      out += ',';
      out += csv_escape(table.row_errors[r]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& col : table.columns) doc["columns"].push_back(col.name);
  doc["rows"] = nlohmann::ordered_json::array();
  const bool with_errors = table.any_error();
  for (size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::ordered_json row;
    for (size_t c = 0; c < table.columns.size(); ++c) {
      const auto& col = table.columns[c];
      if (col.decimals < 0)
        row[col.name] = static_cast<long long>(std::llround(table.rows[r][c]));
      else
        // Serialize through the fixed-decimal text so JSON and CSV agree
        // byte-for-byte on the numeric values.
        row[col.name] = std::stod(format_fixed(table.rows[r][c], col.decimals));
    }
    if (with_errors) row["error"] = table.row_errors[r];
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file " + path);
  out << text;
}

} // namespace qhhl
