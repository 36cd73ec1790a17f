#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "semion/trajectory.hpp"

namespace semion {

/// Numeric table with '#'-prefixed "key: value" metadata lines.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of a column; throws ParameterError if absent.
  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;
  /// First metadata value for `key`, or empty.
  std::string meta(const std::string& key) const;
};

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

/// time, msd, msd_stderr, site_0 .. site_{L-1}, then site_k_stderr columns.
CsvTable trajectory_table(const TrajectoryResult& result);

}  // namespace semion
