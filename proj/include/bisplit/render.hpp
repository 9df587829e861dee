#pragma once

#include <string>

#include "bisplit/layout.hpp"

namespace bisplit {

struct RenderOptions {
  double top_x = 120.0;     // left column
  double bottom_x = 480.0;  // right column
  double slot = 24.0;       // vertical distance between consecutive vertices
  double margin = 40.0;
  double radius = 6.0;
  std::size_t label_chars = 10;
};

/// Two-column SVG: top layer on the left, bottom layer on the right, vertex i
/// of a column at y = margin + i * slot. Blue top vertices, red bottom
/// vertices, one <line> per edge; labels longer than label_chars are
/// truncated and the full label goes into a <title>.
std::string render_svg(const LayoutDocument& doc, const RenderOptions& opts = {});

}  // namespace bisplit
