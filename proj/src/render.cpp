#include "nurikabe/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nurikabe {

namespace {

constexpr int kCell = 48;
constexpr int kMargin = 32;
constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

struct Extent {
  int rows = 0;
  int cols = 0;
};

Extent extent(const SquareTiledSurface& s) {
  Extent e;
  for (const CellPosition& p : s.layout()) {
    e.rows = std::max(e.rows, p.row + 1);
    e.cols = std::max(e.cols, p.col + 1);
  }
  return e;
}

char clue_char(int value) {
  if (value < 10) return static_cast<char>('0' + value);
  if (value < 36) return static_cast<char>('a' + value - 10);
  return '+';
}

void check_options(const SquareTiledSurface& surface, const RenderOptions& options) {
  if (options.coloring && options.coloring->size() != surface.size())
    throw RuleError("coloring has " + std::to_string(options.coloring->size()) + " squares, surface has " +
                    std::to_string(surface.size()));
  validate_clues(surface, options.clues);
}

std::string squares_list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

bool drawn_by_layout(const SquareTiledSurface& surface, const Gluing& g) {
  if (g.reversed || g.a.square == g.b.square) return false;
  const auto& layout = surface.layout();
  auto pos = [&](int sq) { return layout[static_cast<std::size_t>(sq - 1)]; };
  auto neighbours = [&](SideRef x, SideRef y) {
    CellPosition px = pos(x.square), py = pos(y.square);
    if (x.side == Side::E && y.side == Side::W) return py.row == px.row && py.col == px.col + 1;
    if (x.side == Side::S && y.side == Side::N) return py.col == px.col && py.row == px.row + 1;
    return false;
  };
  return neighbours(g.a, g.b) || neighbours(g.b, g.a);
}

std::string render_text(const SquareTiledSurface& surface, const RenderOptions& options) {
  check_options(surface, options);
  const Extent e = extent(surface);
  std::vector<std::string> grid(static_cast<std::size_t>(e.rows), std::string(static_cast<std::size_t>(e.cols), ' '));
  std::map<int, int> clue_at;
  for (const Clue& c : options.clues) clue_at[c.square] = c.size;
  for (int sq = 1; sq <= surface.size(); ++sq) {
    const CellPosition& p = surface.layout()[static_cast<std::size_t>(sq - 1)];
    char ch = '.';
    if (options.coloring && options.coloring->is_water(sq)) ch = '#';
    if (auto it = clue_at.find(sq); it != clue_at.end()) ch = clue_char(it->second);
    grid[static_cast<std::size_t>(p.row)][static_cast<std::size_t>(p.col)] = ch;
  }

  std::ostringstream out;
  for (auto& row : grid) {
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  bool header = false;
  for (const Gluing& g : surface.gluings()) {
    if (drawn_by_layout(surface, g)) continue;
    if (!header) {
      out << "gluings:\n";
      header = true;
    }
    out << "  " << to_string(g.a) << (g.reversed ? " <-> " : " --> ") << to_string(g.b)
        << (g.reversed ? "  reversed" : "") << '\n';
  }
  if (options.orbit_markers) {
    out << "vertices:\n";
    int index = 0;
    for (const VertexOrbit& o : surface.orbits()) {
      out << "  v" << ++index << (o.interior ? " interior" : " boundary") << " degree " << o.square_degree()
          << " squares " << squares_list(o.incident_squares) << '\n';
    }
  }
  return out.str();
}

std::string render_svg(const SquareTiledSurface& surface, const RenderOptions& options) {
  check_options(surface, options);
  const Extent e = extent(surface);
  const int width = 2 * kMargin + e.cols * kCell;
  const int height = 2 * kMargin + e.rows * kCell;
  auto corner_xy = [&](int sq, Corner c) {
    const CellPosition& p = surface.layout()[static_cast<std::size_t>(sq - 1)];
    int x = kMargin + p.col * kCell;
    int y = kMargin + p.row * kCell;
    if (c == Corner::NE || c == Corner::SE) x += kCell;
    if (c == Corner::SE || c == Corner::SW) y += kCell;
    return std::pair{x, y};
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<title>" << surface.name() << "</title>\n";
  out << "<defs>\n";
  for (std::size_t i = 0; i < std::size(kPalette); ++i)
    out << "<marker id=\"arrow" << i << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
        << "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << kPalette[i]
        << "\"/></marker>\n";
  out << "</defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  std::map<int, int> clue_at;
  for (const Clue& c : options.clues) clue_at[c.square] = c.size;
  for (int sq = 1; sq <= surface.size(); ++sq) {
    auto [x, y] = corner_xy(sq, Corner::NW);
    const bool water = options.coloring && options.coloring->is_water(sq);
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
        << (water ? "#203864" : "#ffffff") << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    if (auto it = clue_at.find(sq); it != clue_at.end()) {
      out << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 7 << "\" font-family=\"sans-serif\" "
          << "font-size=\"20\" text-anchor=\"middle\">" << it->second << "</text>\n";
    } else {
      out << "<text x=\"" << x + 4 << "\" y=\"" << y + 12 << "\" font-family=\"sans-serif\" font-size=\"9\" fill=\""
          << (water ? "#ffffff" : "#808080") << "\">" << sq << "</text>\n";
    }
  }

  // Paired arrows: both sides of one gluing share a colour; arrow direction shows endpoint matching.
  int colour = 0;
  for (const Gluing& g : surface.gluings()) {
    if (drawn_by_layout(surface, g)) continue;
    const std::size_t pi = static_cast<std::size_t>(colour++) % std::size(kPalette);
    auto arrow = [&](SideRef s, bool flip) {
      auto [c1, c2] = side_endpoints(s.side);
      if (flip) std::swap(c1, c2);
      auto [x1, y1] = corner_xy(s.square, c1);
      auto [x2, y2] = corner_xy(s.square, c2);
      // Pull the arrow slightly inside the cell and away from the corners.
      const int dx = (x2 - x1) / 6, dy = (y2 - y1) / 6;
      int ox = 0, oy = 0;
      switch (s.side) {
        case Side::N: oy = 5; break;
        case Side::S: oy = -5; break;
        case Side::W: ox = 5; break;
        case Side::E: ox = -5; break;
      }
      out << "<line x1=\"" << x1 + dx + ox << "\" y1=\"" << y1 + dy + oy << "\" x2=\"" << x2 - dx + ox << "\" y2=\""
          << y2 - dy + oy << "\" stroke=\"" << kPalette[pi] << "\" stroke-width=\"2\" marker-end=\"url(#arrow" << pi
          << ")\"/>\n";
    };
    arrow(g.a, false);
    arrow(g.b, g.reversed);
  }

  if (options.orbit_markers) {
    int index = 0;
    for (const VertexOrbit& o : surface.orbits()) {
      const char* fill = kPalette[static_cast<std::size_t>(index++) % std::size(kPalette)];
      for (const CornerRef& c : o.corners) {
        auto [x, y] = corner_xy(c.square, c.corner);
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << (o.interior ? 5 : 3) << "\" fill=\""
            << (o.interior ? fill : "#ffffff") << "\" stroke=\"" << fill << "\"><title>"
            << (o.interior ? "interior" : "boundary") << " degree " << o.square_degree() << " squares "
            << squares_list(o.incident_squares) << "</title></circle>\n";
      }
      if (o.interior) {
        auto [x, y] = corner_xy(o.corners.front().square, o.corners.front().corner);
        out << "<text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
            << fill << "\">" << o.square_degree() << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace nurikabe
