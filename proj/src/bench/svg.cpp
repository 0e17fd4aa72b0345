#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pld::bench {
namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // NaN for non-numeric fields
};

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("svg: cannot open " + path);
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("svg: empty csv " + path);
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream rs(line);
    std::vector<double> row;
    while (std::getline(rs, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        row.push_back(std::nan(""));
      }
    }
    row.resize(t.columns.size(), std::nan(""));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::size_t column_index(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  throw std::runtime_error("svg: no column '" + name + "'");
}

constexpr int kW = 720, kH = 480, kMargin = 60;
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

double nice_min(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace

void svg_line_plot(const std::string& csv_path, const std::string& x_column,
                   const std::vector<std::string>& y_columns, const std::string& svg_path,
                   bool log_y) {
  const Table t = read_csv(csv_path);
  const std::size_t xi = column_index(t, x_column);
  std::vector<std::size_t> yis;
  for (const auto& c : y_columns) yis.push_back(column_index(t, c));

  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  auto yval = [&](double v) { return log_y ? std::log10(std::max(v, 1e-300)) : v; };
  for (const auto& row : t.rows) {
    if (!std::isfinite(row[xi])) continue;
    x_lo = std::min(x_lo, row[xi]);
    x_hi = std::max(x_hi, row[xi]);
    for (std::size_t yi : yis) {
      if (!std::isfinite(row[yi])) continue;
      y_lo = std::min(y_lo, yval(row[yi]));
      y_hi = std::max(y_hi, yval(row[yi]));
    }
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1;
  if (y_hi <= y_lo) y_hi = y_lo + 1;

  auto px = [&](double x) {
    return kMargin + (x - x_lo) / (x_hi - x_lo) * (kW - 2 * kMargin);
  };
  auto py = [&](double y) {
    return kH - kMargin - (yval(y) - y_lo) / (y_hi - y_lo) * (kH - 2 * kMargin);
  };

  std::ofstream out(svg_path);
  if (!out) throw std::runtime_error("svg: cannot open " + svg_path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  out << "<line x1='" << kMargin << "' y1='" << kH - kMargin << "' x2='" << kW - kMargin
      << "' y2='" << kH - kMargin << "' stroke='black'/>\n";
  out << "<line x1='" << kMargin << "' y1='" << kMargin << "' x2='" << kMargin << "' y2='"
      << kH - kMargin << "' stroke='black'/>\n";
  out << "<text x='" << kW / 2 << "' y='" << kH - 15 << "' text-anchor='middle'>" << x_column
      << "</text>\n";

  for (std::size_t s = 0; s < yis.size(); ++s) {
    std::ostringstream pts;
    for (const auto& row : t.rows) {
      if (!std::isfinite(row[xi]) || !std::isfinite(row[yis[s]])) continue;
      pts << px(row[xi]) << ',' << py(row[yis[s]]) << ' ';
    }
    const char* color = kPalette[s % 6];
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='"
        << pts.str() << "'/>\n";
    out << "<text x='" << kW - kMargin + 4 << "' y='" << kMargin + 16 * (s + 1) << "' fill='"
        << color << "' font-size='12'>" << y_columns[s] << "</text>\n";
  }
  // axis extremes
  out << "<text x='" << kMargin << "' y='" << kH - kMargin + 16 << "' font-size='11'>"
      << x_lo << "</text>\n<text x='" << kW - kMargin << "' y='" << kH - kMargin + 16
      << "' text-anchor='end' font-size='11'>" << x_hi << "</text>\n";
  out << "<text x='" << kMargin - 4 << "' y='" << kH - kMargin << "' text-anchor='end' "
      << "font-size='11'>" << nice_min(y_lo) << "</text>\n<text x='" << kMargin - 4 << "' y='"
      << kMargin << "' text-anchor='end' font-size='11'>" << y_hi << "</text>\n";
  out << "</svg>\n";
}

void svg_heatmap(const std::string& csv_path, const std::string& x_column,
                 const std::string& y_column, const std::string& value_column,
                 const std::string& svg_path) {
  const Table t = read_csv(csv_path);
  const std::size_t xi = column_index(t, x_column);
  const std::size_t yi = column_index(t, y_column);
  const std::size_t vi = column_index(t, value_column);

  std::set<double> xs, ys;
  double v_lo = 1e300, v_hi = -1e300;
  for (const auto& row : t.rows) {
    if (!std::isfinite(row[xi]) || !std::isfinite(row[yi]) || !std::isfinite(row[vi])) continue;
    xs.insert(row[xi]);
    ys.insert(row[yi]);
    v_lo = std::min(v_lo, row[vi]);
    v_hi = std::max(v_hi, row[vi]);
  }
  if (xs.empty()) throw std::runtime_error("svg: no numeric data");
  if (v_hi <= v_lo) v_hi = v_lo + 1;
  std::map<double, int> xidx, yidx;
  int k = 0;
  for (double x : xs) xidx[x] = k++;
  k = 0;
  for (double y : ys) yidx[y] = k++;
  const double cw = static_cast<double>(kW - 2 * kMargin) / xs.size();
  const double ch = static_cast<double>(kH - 2 * kMargin) / ys.size();

  std::ofstream out(svg_path);
  if (!out) throw std::runtime_error("svg: cannot open " + svg_path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  for (const auto& row : t.rows) {
    if (!std::isfinite(row[xi]) || !std::isfinite(row[yi]) || !std::isfinite(row[vi])) continue;
    const int g = static_cast<int>(255.0 * (row[vi] - v_lo) / (v_hi - v_lo));
    out << "<rect x='" << kMargin + xidx[row[xi]] * cw << "' y='"
        << kH - kMargin - (yidx[row[yi]] + 1) * ch << "' width='" << cw + 0.5 << "' height='"
        << ch + 0.5 << "' fill='rgb(" << g << ',' << g << ',' << g << ")'/>\n";
  }
  out << "<text x='" << kW / 2 << "' y='" << kH - 15 << "' text-anchor='middle'>" << x_column
      << "</text>\n<text x='15' y='" << kH / 2 << "'>" << y_column << "</text>\n";
  out << "</svg>\n";
}

}  // namespace pld::bench
