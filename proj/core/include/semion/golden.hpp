#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "semion/csv.hpp"

namespace semion {

struct GoldenTolerance {
  double abs = 1e-9;
  double rel = 1e-9;
};

/// Column `c` is statistical when both tables also carry `c_stderr`; it then
/// passes if |a - b| <= sigma * sqrt(se_a^2 + se_b^2) + abs + rel |b|. The
/// stderr columns themselves are not compared.
struct GoldenOptions {
  GoldenTolerance tolerance{};
  std::map<std::string, GoldenTolerance> per_column;
  double sigma = 3.0;
};

struct GoldenMismatch {
  std::size_t row = 0;
  std::string column;
  double actual = 0.0;
  double expected = 0.0;
  double allowed = 0.0;
};

struct GoldenReport {
  std::string schema_error;  // non-empty when the tables are not comparable
  std::vector<GoldenMismatch> mismatches;
  std::size_t compared = 0;

  bool passed() const noexcept { return schema_error.empty() && mismatches.empty(); }
  std::string summary() const;
};

GoldenReport compare_golden(const CsvTable& result, const CsvTable& golden,
                            const GoldenOptions& options = {});
GoldenReport compare_golden(const std::filesystem::path& result, const std::filesystem::path& golden,
                            const GoldenOptions& options = {});

}  // namespace semion
