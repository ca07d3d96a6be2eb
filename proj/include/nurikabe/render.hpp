#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nurikabe/rules.hpp"
#include "nurikabe/surface.hpp"

namespace nurikabe {

struct RenderOptions {
  std::optional<Coloring> coloring;
  std::vector<Clue> clues;
  bool orbit_markers = false;
};

/// True when the gluing is drawn implicitly by two cells sharing an edge in the layout.
bool drawn_by_layout(const SquareTiledSurface& surface, const Gluing& g);

/// Grid of `#` (water), `.` (land) and clue digits, followed by the gluings the
/// layout does not show and, optionally, the vertex orbits.
std::string render_text(const SquareTiledSurface& surface, const RenderOptions& options = {});

/// Standalone SVG document: fundamental domain, paired identification arrows,
/// optional vertex-orbit markers labelled with their square-degree.
std::string render_svg(const SquareTiledSurface& surface, const RenderOptions& options = {});

}  // namespace nurikabe
