#include "qlam/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qlam {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

struct Transform {
  double cx, cy, r;  // disk center and radius in pixels

  std::pair<double, double> map(double x, double y) const {
    return {cx + r * x, cy - r * y};
  }
};

double angle_to_double(const Angle& a) {
  return a.numerator().convert_to<double>() / a.denominator().convert_to<double>();
}

std::string default_color(std::size_t layer_index) {
  static const char* palette[] = {"#1f3a93", "#c0392b", "#1e8449", "#7d3c98",
                                  "#b7950b", "#16a085", "#34495e", "#d35400"};
  return palette[layer_index % (sizeof(palette) / sizeof(palette[0]))];
}

}  // namespace

std::string render_svg(const std::vector<RenderLayer>& layers, const RenderStyle& style,
                       const std::optional<Viewport>& zoom) {
  const double size = static_cast<double>(style.image_size_px);
  const Transform t{size / 2.0, size / 2.0, size / 2.0 - style.stroke_width - 1.0};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.image_size_px
      << "\" height=\"" << style.image_size_px << "\" viewBox=\"0 0 "
      << style.image_size_px << " " << style.image_size_px << "\">\n";

  if (zoom) {
    // pixel-space affine viewport transform only; no re-projection
    const auto [px, py] = t.map(zoom->center_x, zoom->center_y);
    svg << "<g transform=\"translate(" << fmt(t.cx - zoom->scale * px) << " "
        << fmt(t.cy - zoom->scale * py) << ") scale(" << fmt(zoom->scale) << ")\">\n";
  }

  // the unit circle, as a path so that 1 + leaf count paths appear
  svg << "<path d=\"M " << fmt(t.cx + t.r) << " " << fmt(t.cy) << " A " << fmt(t.r)
      << " " << fmt(t.r) << " 0 1 0 " << fmt(t.cx - t.r) << " " << fmt(t.cy) << " A "
      << fmt(t.r) << " " << fmt(t.r) << " 0 1 0 " << fmt(t.cx + t.r) << " " << fmt(t.cy)
      << " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
      << fmt(style.stroke_width) << "\"/>\n";

  std::size_t layer_index = 0;
  for (const RenderLayer& layer : layers) {
    const auto it = style.color_map.find(layer.label);
    const std::string color = it != style.color_map.end() ? it->second
                                                          : default_color(layer_index);
    for (const Chord& c : layer.chords) {
      if (c.degenerate()) continue;
      const double ta = 2.0 * kPi * angle_to_double(c.a());
      const double tb = 2.0 * kPi * angle_to_double(c.b());
      const auto [x1, y1] = t.map(std::cos(ta), std::sin(ta));
      const auto [x2, y2] = t.map(std::cos(tb), std::sin(tb));

      const bool diameter = chord_length(c) == Rational(1, 2);
      svg << "<path d=\"M " << fmt(x1) << " " << fmt(y1);
      if (style.arc_mode == RenderStyle::ArcMode::StraightChord || diameter) {
        svg << " L " << fmt(x2) << " " << fmt(y2);
      } else {
        // geodesic arc: circle orthogonal to the unit circle through both
        // endpoints, center at the intersection of the boundary tangents
        const double ax = std::cos(ta), ay = std::sin(ta);
        const double bx = std::cos(tb), by = std::sin(tb);
        const double u = ax * bx + ay * by;
        const double ox = (ax + bx) / (1.0 + u);
        const double oy = (ay + by) / (1.0 + u);
        const double radius = t.r * std::sqrt((1.0 - u) / (1.0 + u));
        const auto [cx, cy] = t.map(ox, oy);
        // minor arc; sweep from the sign of the cross product around the center
        const double cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
        svg << " A " << fmt(radius) << " " << fmt(radius) << " 0 0 "
            << (cross > 0 ? 1 : 0) << " " << fmt(x2) << " " << fmt(y2);
      }
      svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
          << fmt(style.stroke_width) << "\"/>\n";
    }
    for (const Angle& p : layer.points) {
      const double tp = 2.0 * kPi * angle_to_double(p);
      const auto [x, y] = t.map(std::cos(tp), std::sin(tp));
      svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\""
          << fmt(1.5 * style.stroke_width) << "\" fill=\"" << color << "\"/>\n";
    }
    ++layer_index;
  }

  if (zoom) svg << "</g>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qlam
