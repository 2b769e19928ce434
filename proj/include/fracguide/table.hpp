#pragma once

// Column-oriented result table with CSV and JSON writers.
//
// CSV: UTF-8, comma separated, '\n' line endings, one header row. Reals are
// printed in scientific notation with 12 significant digits; missing values
// are empty cells. JSON: {"config": {...}, "rows": [{column: value}, ...]}
// with null for missing values.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace fracguide::table {

using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_real(double v);

void write_csv(const Table& t, std::ostream& os);

void write_json(const Table& t, const nlohmann::ordered_json& config, std::ostream& os);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace fracguide::table
