#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace cheb::cli {

using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

/// A report: named columns and rows of cells, all rows the same width.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { json, csv };

Format parse_format(const std::string& name);

/// Floats use 12 significant digits. JSON: a single row is a flat object with a
/// leading "command" key, several rows become {"command": ..., "rows": [...]};
/// non-finite floats become null. CSV: header line, then one line per row.
void emit(const Table& table, Format format, std::ostream& out);

std::string format_double(double v);

}  // namespace cheb::cli
