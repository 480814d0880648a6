#include "bosent/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace bosent {

std::size_t SweepTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("SweepTable: no column named '" + name + "'");
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  if (ec != std::errc()) {
    throw std::runtime_error("format_real: conversion failed");
  }
  return std::string(buf, ptr);
}

namespace {

void check_shape(const SweepTable& t) {
  if (t.flagged.size() != t.rows.size()) {
    throw std::invalid_argument("table: flag list and row count differ");
  }
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("table: row width does not match header");
    }
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof(esc), "\\u%04x", c);
          out += esc;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const SweepTable& table) {
  check_shape(table);
  for (const auto& [key, value] : table.metadata) {
    os << "# " << key << " = " << value << "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ",";
    os << table.columns[i];
  }
  os << ",flagged\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
      if (i) os << ",";
      os << format_real(table.rows[r][i]);
    }
    os << "," << (table.flagged[r] ? 1 : 0) << "\n";
  }
}

void write_json(std::ostream& os, const SweepTable& table) {
  check_shape(table);
  os << "{\n  \"metadata\": {";
  for (std::size_t i = 0; i < table.metadata.size(); ++i) {
    if (i) os << ",";
    os << "\n    \"" << json_escape(table.metadata[i].first) << "\": \""
       << json_escape(table.metadata[i].second) << "\"";
  }
  os << (table.metadata.empty() ? "" : "\n  ") << "},\n  \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ", ";
    os << "\"" << json_escape(table.columns[i]) << "\"";
  }
  os << ", \"flagged\"],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
      if (i) os << ", ";
      const double v = table.rows[r][i];
      if (std::isnan(v)) {
        os << "null";
      } else {
        os << format_real(v);
      }
    }
    os << ", " << (table.flagged[r] ? 1 : 0) << "]";
  }
  os << "\n  ]\n}\n";
}

void write_table_file(const std::filesystem::path& path, TableFormat format,
                      const SweepTable& table) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    if (format == TableFormat::csv) {
      write_csv(os, table);
    } else {
      write_json(os, table);
    }
    if (!os.good()) {
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace bosent
