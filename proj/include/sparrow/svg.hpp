#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sparrow {

struct PlotSeries {
  std::string name;
  std::string color;  // any SVG colour
  std::vector<std::pair<double, double>> points;
  bool markers_only = false;  // scatter instead of polyline
};

/// Self-contained SVG line/scatter chart with linear axes. Output is a pure
/// function of the inputs (fixed 2-decimal coordinates).
std::string svg_chart(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<PlotSeries>& series);

}  // namespace sparrow
