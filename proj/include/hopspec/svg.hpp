#pragma once

#include <string>
#include <vector>

#include "hopspec/cpoly.hpp"
#include "hopspec/dyson.hpp"

namespace hopspec::svg {

struct Layer {
  std::string label;
  std::string color;  // any CSS color
  double radius = 1.4;
  std::vector<Complex> points;
};

struct Options {
  double x0 = -2.2, x1 = 2.2, y0 = -2.2, y1 = 2.2;
  int width = 800, height = 800;
  std::size_t max_points_per_layer = 200000;  // excess is dropped, noted in a comment
};

// Scatter plot of complex points, layers drawn in order.  Output is
// deterministic for identical inputs.
std::string render_scatter(const std::vector<Layer>& layers, const Options& opt);

// Escape-fraction heat map; cells with excluded gamma render the same as
// their escape fraction dictates (the raster is the fraction, not gamma).
std::string render_heatmap(const EscapeMap& map, int width = 800, int height = 800);

}  // namespace hopspec::svg
