#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>

#include "lowdiam/graph.hpp"
#include "lowdiam/rng.hpp"

namespace lowdiam {

// Stable color per center id; mid-range channels so adjacent pieces stay
// distinguishable on white.
inline std::uint32_t center_color(Vertex center) {
  std::uint64_t h = mix64(0xc010fULL ^ (static_cast<std::uint64_t>(center) * 0x9e3779b97f4a7c15ULL));
  auto chan = [&](int shift) { return 48 + static_cast<std::uint32_t>((h >> shift) & 0xff) * 160 / 255; };
  return (chan(0) << 16) | (chan(16) << 8) | chan(32);
}

// One SVG rect per grid cell, row-major: vertex (r, c) = r*cols + c.
inline void render_grid_svg(std::uint32_t rows, std::uint32_t cols,
                            std::span<const Vertex> owner, std::ostream& out, int cell_px = 4) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("render_grid_svg: bad dimensions");
  if (owner.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("render_grid_svg: labels cover " + std::to_string(owner.size()) +
                                " vertices, grid has " + std::to_string(rows * cols));
  if (cell_px < 1) cell_px = 1;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * cell_px << "\" height=\""
      << rows * cell_px << "\" shape-rendering=\"crispEdges\">\n";
  char buf[160];
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      std::uint32_t color = center_color(owner[static_cast<std::size_t>(r) * cols + c]);
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%u\" y=\"%u\" width=\"%d\" height=\"%d\" fill=\"#%06x\"/>\n",
                    c * cell_px, r * cell_px, cell_px, cell_px, color);
      out << buf;
    }
  }
  out << "</svg>\n";
}

}  // namespace lowdiam
