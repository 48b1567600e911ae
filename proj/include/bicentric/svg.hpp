#pragma once

#include <string>

#include "bicentric/scene.hpp"

namespace bicentric {

struct RenderOptions {
  int width_px = 800;
  bool show_excircles = false;
  bool show_bisectors = false;
};

// Standalone SVG for a scene, byte-deterministic: fixed element order (circles,
// then side segments, then point markers), fixed colors, no timestamps or
// generated ids. The view box is fitted to the union of all featured circles
// with a 5% margin. Point markers are small squares so that the only circle
// elements are the actual circles.
std::string render_svg(const BicentricScene& scene, const RenderOptions& options = {});

}  // namespace bicentric
