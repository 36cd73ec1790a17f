#include "semion/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "semion/errors.hpp"

namespace semion {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw ParameterError("no column named '" + name + "'");
}

bool CsvTable::has_column(const std::string& name) const {
  for (const auto& c : columns)
    if (c == name) return true;
  return false;
}

std::string CsvTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return {};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const CsvTable& t) {
  for (const auto& [k, v] : t.metadata) out << "# " << k << ": " << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) throw ParameterError("row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const CsvTable& t) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot open " + path.string() + " for writing");
  write_csv(out, t);
  if (!out) throw ParameterError("failed writing " + path.string());
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    // from_chars rejects "inf"/"nan" spellings on some libraries.
    try {
      std::size_t used = 0;
      v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ParameterError("line " + std::to_string(line) + ": '" + s + "' is not a number");
    }
  }
  return v;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  std::size_t n = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      const auto colon = body.find(": ");
      if (colon == std::string::npos)
        t.metadata.emplace_back(body, "");
      else
        t.metadata.emplace_back(body.substr(0, colon), body.substr(colon + 2));
      continue;
    }
    if (!header) {
      t.columns = split(line);
      header = true;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != t.columns.size())
      throw ParameterError("line " + std::to_string(n) + " has " + std::to_string(cells.size()) +
                           " fields, header has " + std::to_string(t.columns.size()));
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_number(c, n));
    t.rows.push_back(std::move(row));
  }
  if (!header) throw ParameterError("CSV has no header line");
  return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path.string());
  return read_csv(in);
}

CsvTable trajectory_table(const TrajectoryResult& r) {
  CsvTable t;
  const std::size_t sites = r.sites();
  t.columns = {"time", "msd", "msd_stderr"};
  for (std::size_t s = 0; s < sites; ++s) t.columns.push_back("site_" + std::to_string(s));
  for (std::size_t s = 0; s < sites; ++s) t.columns.push_back("site_" + std::to_string(s) + "_stderr");
  t.metadata = {{"origin", std::to_string(r.origin)},
                {"realizations", std::to_string(r.realizations)},
                {"failed_realizations", std::to_string(r.failed)},
                {"seed", std::to_string(r.seed)}};
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    std::vector<double> row{r.times[k], r.msd[k], r.msd_stderr[k]};
    row.insert(row.end(), r.profile[k].begin(), r.profile[k].end());
    row.insert(row.end(), r.profile_stderr[k].begin(), r.profile_stderr[k].end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace semion
