#include "cheb/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "cheb/common.hpp"

namespace cheb::cli {
namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render(const Cell& cell, Format format) {
  return std::visit(
      [format](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v) && format == Format::json) return "null";
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return format == Format::json ? json_string(v) : csv_field(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

void json_row(const Table& t, const std::vector<Cell>& row, bool with_command, std::ostream& out,
              const std::string& indent) {
  out << "{";
  bool first = true;
  if (with_command) {
    out << "\n" << indent << "  \"command\": " << json_string(t.command);
    first = false;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (first ? "\n" : ",\n") << indent << "  " << json_string(t.columns[i]) << ": "
        << render(row[i], Format::json);
    first = false;
  }
  out << "\n" << indent << "}";
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  require(row.size() == columns.size(), "Table: row width does not match the header");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw DomainError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const Table& table, Format format, std::ostream& out) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(table.columns[i]);
    }
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render(row[i], format);
      out << "\n";
    }
    return;
  }
  if (table.rows.size() == 1) {
    json_row(table, table.rows.front(), true, out, "");
    out << "\n";
    return;
  }
  out << "{\n  \"command\": " << json_string(table.command) << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ", " : "");
    json_row(table, table.rows[r], false, out, "  ");
  }
  out << "]\n}\n";
}

}  // namespace cheb::cli
