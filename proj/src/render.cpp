#include "bisplit/render.hpp"

#include <algorithm>
#include <sstream>

namespace bisplit {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Truncate on a UTF-8 character boundary.
std::string shorten(const std::string& label, std::size_t chars) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if ((static_cast<unsigned char>(label[i]) & 0xC0) != 0x80 && seen++ == chars) return label.substr(0, i) + "...";
  }
  return label;
}

}  // namespace

std::string render_svg(const LayoutDocument& doc, const RenderOptions& o) {
  const auto& g = doc.graph;
  const auto pos = resolve_order(g, doc.order);
  auto y = [&](std::size_t i) { return o.margin + static_cast<double>(i) * o.slot; };
  const auto rows = std::max(g.top().size(), g.bottom().size());
  const double width = o.bottom_x + o.margin + 120.0;
  const double height = y(rows) + o.margin;

  std::ostringstream svg;
  svg.precision(12);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<text class=\"crossings\" x=\"" << o.margin << "\" y=\"" << o.margin / 2 << "\">crossings: " << doc.crossings
      << "</text>\n";
  svg << "<g class=\"edges\" stroke=\"#888\" stroke-width=\"1\">\n";
  for (auto [t, b] : g.edge_indices()) {
    svg << "<line x1=\"" << o.top_x << "\" y1=\"" << y(pos.top[t]) << "\" x2=\"" << o.bottom_x << "\" y2=\""
        << y(pos.bottom[b]) << "\"/>\n";
  }
  svg << "</g>\n";

  auto column = [&](Side s) {
    const bool top = s == Side::top;
    const double x = top ? o.top_x : o.bottom_x;
    svg << "<g class=\"" << (top ? "top" : "bottom") << "\" fill=\"" << (top ? "#1f77b4" : "#d62728") << "\">\n";
    const auto& layer = g.layer(s);
    for (std::size_t v = 0; v < layer.size(); ++v) {
      const double cy = y(pos.layer(s)[v]);
      const double tx = top ? x - o.radius - 4 : x + o.radius + 4;
      svg << "<g data-id=\"" << escape(layer[v].id) << "\"><title>" << escape(layer[v].label) << "</title>"
          << "<circle cx=\"" << x << "\" cy=\"" << cy << "\" r=\"" << o.radius << "\"/>"
          << "<text x=\"" << tx << "\" y=\"" << cy + 4 << "\" text-anchor=\"" << (top ? "end" : "start") << "\">"
          << escape(shorten(layer[v].label, o.label_chars)) << "</text></g>\n";
    }
    svg << "</g>\n";
  };
  column(Side::top);
  column(Side::bottom);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bisplit
