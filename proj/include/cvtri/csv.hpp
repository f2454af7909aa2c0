#pragma once

// Self-describing CSV tables:
//
//   # cv-triparty v1, subcommand=<id>, params=<key=value;...>
//   col_a,col_b,...
//   <rows>
//   # optional trailing comment lines
//
// Numbers are written with 9 significant digits ("%.9g"), '.' as the decimal
// separator and '\n' line endings, so identical inputs give identical bytes.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cvtri {

std::string format_number(double value);

struct CsvTable {
  std::string subcommand;
  std::map<std::string, std::string> params;  // serialised in key order
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> trailer;  // written as "# <line>"

  std::string header_line() const;
  void write(std::ostream& out) const;

  /// Index of a named column; throws std::out_of_range if absent.
  std::size_t column_index(const std::string& name) const;
};

/// Reads a table written by CsvTable::write (or any CSV with one header row).
/// Lines starting with '#' are skipped. Throws std::runtime_error when the
/// file is missing, empty, or ragged.
CsvTable read_csv(const std::string& path);

}  // namespace cvtri
