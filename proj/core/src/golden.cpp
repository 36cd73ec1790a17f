#include "semion/golden.hpp"

#include <cmath>
#include <sstream>

namespace semion {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

GoldenReport compare_golden(const CsvTable& result, const CsvTable& golden, const GoldenOptions& opt) {
  GoldenReport rep;
  if (result.columns != golden.columns) {
    std::ostringstream msg;
    msg << "column mismatch: result has " << result.columns.size() << " columns, golden has "
        << golden.columns.size();
    for (std::size_t i = 0; i < std::min(result.columns.size(), golden.columns.size()); ++i)
      if (result.columns[i] != golden.columns[i]) {
        msg << "; first difference at column " << i << " ('" << result.columns[i] << "' vs '"
            << golden.columns[i] << "')";
        break;
      }
    rep.schema_error = msg.str();
    return rep;
  }
  if (result.rows.size() != golden.rows.size()) {
    rep.schema_error = "row count mismatch: result has " + std::to_string(result.rows.size()) +
                       ", golden has " + std::to_string(golden.rows.size());
    return rep;
  }
  const auto& cols = golden.columns;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const std::string& name = cols[c];
    if (ends_with(name, "_stderr") && golden.has_column(name.substr(0, name.size() - 7))) continue;
    const bool statistical = golden.has_column(name + "_stderr");
    const std::size_t se = statistical ? golden.column(name + "_stderr") : 0;
    auto tol_it = opt.per_column.find(name);
    const GoldenTolerance tol = tol_it == opt.per_column.end() ? opt.tolerance : tol_it->second;
    for (std::size_t r = 0; r < golden.rows.size(); ++r) {
      const double a = result.rows[r][c];
      const double b = golden.rows[r][c];
      ++rep.compared;
      if (std::isnan(a) && std::isnan(b)) continue;
      double allowed = tol.abs + tol.rel * std::abs(b);
      if (statistical) {
        const double sa = result.rows[r][se];
        const double sb = golden.rows[r][se];
        allowed += opt.sigma * std::sqrt(sa * sa + sb * sb);
      }
      if (!(std::abs(a - b) <= allowed)) rep.mismatches.push_back({r, name, a, b, allowed});
    }
  }
  return rep;
}

GoldenReport compare_golden(const std::filesystem::path& result, const std::filesystem::path& golden,
                            const GoldenOptions& options) {
  return compare_golden(read_csv(result), read_csv(golden), options);
}

std::string GoldenReport::summary() const {
  std::ostringstream out;
  if (!schema_error.empty()) {
    out << "FAIL schema: " << schema_error << '\n';
    return out.str();
  }
  if (mismatches.empty()) {
    out << "PASS " << compared << " values within tolerance\n";
    return out.str();
  }
  out << "FAIL " << mismatches.size() << " of " << compared << " values out of tolerance\n";
  for (const auto& m : mismatches)
    out << "  row " << m.row << " column " << m.column << ": got " << format_double(m.actual)
        << ", expected " << format_double(m.expected) << ", allowed deviation "
        << format_double(m.allowed) << '\n';
  return out.str();
}

}  // namespace semion
