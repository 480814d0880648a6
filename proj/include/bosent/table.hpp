#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bosent {

/// Column-labelled numeric table with ordered metadata, the common carrier
/// for sweep and convergence output. Rows are kept in parameter order; the
/// per-row flag marks entries the producer could not fully compute (heavy
/// truncation, cutoff cap, instability).
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<bool> flagged;
  std::vector<std::pair<std::string, std::string>> metadata;

  std::size_t column_index(const std::string& name) const;
};

/// Shortest locale-independent decimal form of x with 17 significant
/// digits ('.' decimal point, no grouping); NaN prints as "nan".
std::string format_real(double x);

/// CSV: one header line naming the columns plus a trailing "flagged"
/// column, then one row per entry, '\n' line endings, values from
/// format_real. Metadata goes into leading '#' comment lines.
void write_csv(std::ostream& os, const SweepTable& table);

/// JSON object {"metadata": {...}, "columns": [...], "rows": [[...]]}
/// with numbers serialized by format_real, bit-for-bit the same digits as
/// the CSV writer (NaN becomes null). Each row carries the flag as a
/// trailing 0/1 like the CSV.
void write_json(std::ostream& os, const SweepTable& table);

enum class TableFormat { csv, json };

/// Serialize to `path` atomically: write a sibling temp file, then rename.
void write_table_file(const std::filesystem::path& path, TableFormat format,
                      const SweepTable& table);

}  // namespace bosent
