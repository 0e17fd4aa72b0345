#pragma once

#include <string>
#include <vector>

namespace pld::bench {

// Optional SVG rendering of the exported CSVs; the numeric core stays
// plot-agnostic and all data flows through the frozen CSV schemas.

/// Line plot of `y_columns` against `x_column`. Rows with non-numeric fields
/// are skipped. Throws std::runtime_error on missing columns.
void svg_line_plot(const std::string& csv_path, const std::string& x_column,
                   const std::vector<std::string>& y_columns, const std::string& svg_path,
                   bool log_y = false);

/// Grayscale heatmap of `value_column` over the (x_column, y_column) grid.
void svg_heatmap(const std::string& csv_path, const std::string& x_column,
                 const std::string& y_column, const std::string& value_column,
                 const std::string& svg_path);

}  // namespace pld::bench
