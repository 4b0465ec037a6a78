#include "hopspec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hopspec::svg {

namespace {

std::string num(double v) {
  // two decimals is plenty for pixel coordinates and keeps files small
  const double r = std::round(v * 100.0) / 100.0;
  std::string s = format_double(r);
  return s;
}

struct Mapper {
  const Options& opt;
  double px(double x) const { return (x - opt.x0) / (opt.x1 - opt.x0) * opt.width; }
  double py(double y) const { return (opt.y1 - y) / (opt.y1 - opt.y0) * opt.height; }
};

void header(std::string& out, int w, int h) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_scatter(const std::vector<Layer>& layers, const Options& opt) {
  std::string out;
  header(out, opt.width, opt.height);
  const Mapper m{opt};

  // light axes through the origin when visible
  if (opt.x0 < 0.0 && opt.x1 > 0.0)
    out += "<line x1=\"" + num(m.px(0)) + "\" y1=\"0\" x2=\"" + num(m.px(0)) + "\" y2=\"" +
           std::to_string(opt.height) + "\" stroke=\"#ddd\"/>\n";
  if (opt.y0 < 0.0 && opt.y1 > 0.0)
    out += "<line x1=\"0\" y1=\"" + num(m.py(0)) + "\" x2=\"" + std::to_string(opt.width) +
           "\" y2=\"" + num(m.py(0)) + "\" stroke=\"#ddd\"/>\n";

  for (const Layer& layer : layers) {
    const std::size_t n = std::min(layer.points.size(), opt.max_points_per_layer);
    out += "<g fill=\"" + layer.color + "\" fill-opacity=\"0.75\">";
    if (!layer.label.empty()) out += "<!-- " + layer.label + " -->";
    out += "\n";
    if (n < layer.points.size())
      out += "<!-- " + std::to_string(layer.points.size() - n) + " points dropped -->\n";
    for (std::size_t i = 0; i < n; ++i) {
      const Complex& z = layer.points[i];
      const double x = m.px(z.real()), y = m.py(z.imag());
      if (x < -10 || x > opt.width + 10 || y < -10 || y > opt.height + 10) continue;
      out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" +
             num(layer.radius) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

namespace {

std::string ramp_color(double f) {
  // dark blue -> teal -> yellow
  f = std::clamp(f, 0.0, 1.0);
  auto lerp = [](double a, double b, double t) { return a + (b - a) * t; };
  double r, g, b;
  if (f < 0.5) {
    const double t = f * 2.0;
    r = lerp(18, 38, t);
    g = lerp(42, 140, t);
    b = lerp(88, 140, t);
  } else {
    const double t = (f - 0.5) * 2.0;
    r = lerp(38, 250, t);
    g = lerp(140, 210, t);
    b = lerp(140, 60, t);
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", int(r), int(g), int(b));
  return buf;
}

}  // namespace

std::string render_heatmap(const EscapeMap& map, int width, int height) {
  std::string out;
  header(out, width, height);
  const double cw = double(width) / double(map.grid.nx);
  const double ch = double(height) / double(map.grid.ny);
  for (std::size_t iy = 0; iy < map.grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < map.grid.nx; ++ix) {
      const double f = map.escape_fraction[iy * map.grid.nx + ix];
      // grid row 0 is the bottom of the complex plane; SVG y grows downward
      const double x = double(ix) * cw;
      const double y = double(map.grid.ny - 1 - iy) * ch;
      out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cw + 0.5) +
             "\" height=\"" + num(ch + 0.5) + "\" fill=\"" + ramp_color(f) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hopspec::svg
