#pragma once

#include <string>
#include <vector>

namespace hardy::plot {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct Figure {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG document: axes with ticks, one polyline per series, legend.
std::string render_svg(const Figure& figure);

}  // namespace hardy::plot
