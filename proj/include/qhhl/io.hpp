#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhhl/statevector.hpp"

namespace qhhl {

/// Plain-text symmetric/general matrix: `dim <n>` then n whitespace-separated
/// rows; `#` comments and blank lines ignored.  Throws ParseError.
RMatrix load_matrix(const std::string& path);

/// Plain-text vector: `dim <n>` then n reals (any whitespace layout).
RVector load_vector(const std::string& path);

/// Rounds half away from zero to `decimals` places.  All serialization
/// rounding funnels through here so CSV and JSON emit identical values.
double round_to(double x, int decimals);

/// Fixed-decimal text for a rounded value ("-0.000000" normalized to
/// "0.000000").
std::string format_fixed(double x, int decimals);

/// A serializable table: named columns with per-column decimal places
/// (negative decimals = integer column).
struct Table {
  struct Column {
    std::string name;
    int decimals = 6;
  };
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  /// Per-row error annotations; empty string = row OK.
  std::vector<std::string> row_errors;

  void add_row(std::vector<double> values, std::string error = "");
  bool any_error() const;
};

/// Deterministic CSV: header line, then one line per row, values formatted by
/// the column decimals; rows with an error get text in a trailing `error`
/// column (emitted only when at least one row errs).
std::string to_csv(const Table& table);

/// Deterministic JSON: {"columns": [...], "rows": [{name: value, ...}, ...]};
/// numeric values rounded identically to the CSV writer.
std::string to_json(const Table& table);

/// Writes `text` to `path`, or to stdout when path is empty.
void write_output(const std::string& text, const std::string& path);

} // namespace qhhl
