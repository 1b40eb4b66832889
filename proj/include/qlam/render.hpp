#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlam/lamination.hpp"
#include "qlam/leaf_io.hpp"

namespace qlam {

struct RenderStyle {
  enum class ArcMode { HyperbolicGeodesic, StraightChord };

  int image_size_px = 800;
  double stroke_width = 1.0;
  std::map<std::string, std::string> color_map;  // provenance label -> color
  ArcMode arc_mode = ArcMode::HyperbolicGeodesic;
};

struct Viewport {
  double center_x = 0.0;  // unit-disk coordinates
  double center_y = 0.0;
  double scale = 1.0;
};

/// One labeled layer of leaves; the label selects the stroke color.
struct RenderLayer {
  std::string label;
  std::vector<Chord> chords;
  std::vector<Angle> points;
};

/// Deterministic SVG of the unit circle plus one path per non-degenerate
/// chord: orthogonal circular arcs in geodesic mode, diameters straight.
/// Degenerate leaves become small dots (circle elements, not paths).
/// Floating point is confined to this renderer.
std::string render_svg(const std::vector<RenderLayer>& layers,
                       const RenderStyle& style,
                       const std::optional<Viewport>& zoom = {});

}  // namespace qlam
