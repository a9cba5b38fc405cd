#pragma once

#include <string>
#include <vector>

namespace rnls_cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Axes {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool log_y = false;
};

/// Polylines, one per series, with a legend.
void write_line_plot(const std::string& path, const Axes& axes, const std::vector<Series>& series);

/// Unconnected points, one colour per series.
void write_scatter_plot(const std::string& path, const Axes& axes,
                        const std::vector<Series>& series);

/// values[row][col] on a rows x cols grid; rows run along y (time), cols along x.
void write_heatmap(const std::string& path, const Axes& axes, const std::vector<double>& x,
                   const std::vector<double>& y, const std::vector<std::vector<double>>& values);

}  // namespace rnls_cli
