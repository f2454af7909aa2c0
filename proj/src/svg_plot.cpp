#include "cvtri/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

namespace cvtri {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

std::optional<double> guide_level(const std::string& column) {
  if (starts_with(column, "pi_") || starts_with(column, "min_pi_") || starts_with(column, "e_")) {
    return 1.0;
  }
  if (starts_with(column, "k_") || starts_with(column, "max_k_")) return 0.0;
  if (starts_with(column, "ds_") || starts_with(column, "v_")) return 4.0;
  return std::nullopt;
}

void render_plot(const CsvTable& table, const std::vector<std::string>& columns,
                 std::ostream& out) {
  if (table.rows.empty()) throw std::invalid_argument("render_plot: table has no rows");
  if (columns.empty()) throw std::invalid_argument("render_plot: no columns selected");
  std::vector<std::size_t> idx;
  for (const auto& c : columns) idx.push_back(table.column_index(c));

  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& row : table.rows) {
    x_lo = std::min(x_lo, row[0]);
    x_hi = std::max(x_hi, row[0]);
    for (std::size_t c : idx) {
      if (!std::isfinite(row[c])) continue;
      y_lo = std::min(y_lo, row[c]);
      y_hi = std::max(y_hi, row[c]);
    }
  }
  std::set<double> guides;
  for (const auto& c : columns) {
    if (auto g = guide_level(c)) {
      guides.insert(*g);
      y_lo = std::min(y_lo, *g);
      y_hi = std::max(y_hi, *g);
    }
  }
  if (!std::isfinite(y_lo)) y_lo = 0.0, y_hi = 1.0;
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };
  auto num = [](double v) { return format_number(v); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 4; ++t) {
    const double xv = x_lo + (x_hi - x_lo) * t / 4.0;
    const double yv = y_lo + (y_hi - y_lo) * t / 4.0;
    out << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kHeight - kBottom + 18)
        << "\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(yv) + 4)
        << "\" text-anchor=\"end\">" << format_number(std::round(yv * 1e4) / 1e4) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 10)
      << "\" text-anchor=\"middle\">" << table.columns[0] << "</text>\n";

  for (double g : guides) {
    out << "<line x1=\"" << num(kLeft) << "\" x2=\"" << num(kLeft + plot_w) << "\" y1=\""
        << num(py(g)) << "\" y2=\"" << num(py(g))
        << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  }

  for (std::size_t s = 0; s < idx.size(); ++s) {
    const char* colour = kPalette[s % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : table.rows) {
      const double y = row[idx[s]];
      if (!std::isfinite(y)) continue;
      out << (first ? "" : " ") << num(px(row[0])) << ',' << num(py(y));
      first = false;
    }
    out << "\"/>\n";
    const double ly = kTop + 16.0 * static_cast<double>(s + 1);
    out << "<line x1=\"" << num(kWidth - kRight + 10) << "\" x2=\"" << num(kWidth - kRight + 30)
        << "\" y1=\"" << num(ly - 4) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << colour
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << num(kWidth - kRight + 35) << "\" y=\"" << num(ly) << "\">"
        << columns[s] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace cvtri
