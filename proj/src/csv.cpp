#include "cvtri/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace cvtri {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_number(const std::string& s) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  if (in.fail()) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::runtime_error("csv: cannot parse number '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double value) {
  // %g honours LC_NUMERIC; the CLI never changes it from "C".
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

std::string CsvTable::header_line() const {
  std::string p;
  for (const auto& [k, v] : params) {
    if (!p.empty()) p += ';';
    p += k + '=' + v;
  }
  return "# cv-triparty v1, subcommand=" + subcommand + ", params=" + p;
}

void CsvTable::write(std::ostream& out) const {
  out << header_line() << '\n';
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << '\n';
  }
  for (const auto& line : trailer) out << "# " << line << '\n';
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return c;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);
  CsvTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto pos = line.find("subcommand=");
      if (table.columns.empty() && pos != std::string::npos) {
        table.subcommand = line.substr(pos + 11, line.find(',', pos) - pos - 11);
      }
      continue;
    }
    if (table.columns.empty()) {
      table.columns = split(line, ',');
      continue;
    }
    std::vector<double> row;
    for (const auto& f : split(line, ',')) row.push_back(parse_number(f));
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("csv: row has " + std::to_string(row.size()) + " fields, expected " +
                               std::to_string(table.columns.size()));
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw std::runtime_error("csv: " + path + " has no header row");
  if (table.rows.empty()) throw std::runtime_error("csv: " + path + " has no data rows");
  return table;
}

}  // namespace cvtri
