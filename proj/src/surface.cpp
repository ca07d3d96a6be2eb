#include "nurikabe/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nurikabe/disjoint_sets.hpp"

namespace nurikabe {

ParseError::ParseError(int line, const std::string& what)
    : SurfaceError("line " + std::to_string(line) + ": " + what), line_(line) {}

char side_char(Side s) {
  static constexpr char kChars[] = {'N', 'E', 'S', 'W'};
  return kChars[static_cast<int>(s)];
}

std::string_view corner_name(Corner c) {
  static constexpr std::string_view kNames[] = {"NW", "NE", "SE", "SW"};
  return kNames[static_cast<int>(c)];
}

std::optional<Side> side_from_char(char c) {
  switch (c) {
    case 'N': return Side::N;
    case 'E': return Side::E;
    case 'S': return Side::S;
    case 'W': return Side::W;
    default: return std::nullopt;
  }
}

std::pair<Corner, Corner> side_endpoints(Side s) {
  switch (s) {
    case Side::N: return {Corner::NW, Corner::NE};
    case Side::S: return {Corner::SW, Corner::SE};
    case Side::W: return {Corner::NW, Corner::SW};
    case Side::E: return {Corner::NE, Corner::SE};
  }
  return {Corner::NW, Corner::NE};
}

std::string to_string(SideRef s) { return std::to_string(s.square) + "." + side_char(s.side); }

std::uint64_t VertexOrbit::square_mask() const {
  std::uint64_t m = 0;
  for (int sq : incident_squares)
    if (sq >= 1 && sq <= 64) m |= std::uint64_t{1} << (sq - 1);
  return m;
}

bool AdjacencyGraph::adjacent(int u, int v) const {
  if (u < 1 || u > n_vertices) return false;
  const auto& nb = neighbors[u - 1];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool AdjacencyGraph::connected() const {
  if (n_vertices == 0) return true;
  std::vector<char> seen(n_vertices, 0);
  std::vector<int> stack{1};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : neighbors[u - 1]) {
      if (!seen[v - 1]) {
        seen[v - 1] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_vertices;
}

namespace {

Gluing canonical(Gluing g) {
  if (g.b < g.a) std::swap(g.a, g.b);
  return g;
}

bool corner_on_side(Corner c, Side s) {
  auto [p, q] = side_endpoints(s);
  return c == p || c == q;
}

}  // namespace

SquareTiledSurface::SquareTiledSurface(int n_squares, std::vector<Gluing> gluings, std::string name,
                                       std::vector<CellPosition> layout)
    : n_squares_(n_squares), name_(std::move(name)), layout_(std::move(layout)) {
  if (n_squares < 1) throw SurfaceError("surface needs at least one square");
  if (layout_.empty()) {
    for (int i = 0; i < n_squares; ++i) layout_.push_back({0, i});
  } else if (static_cast<int>(layout_.size()) != n_squares) {
    throw SurfaceError("layout size does not match square count");
  }

  for (auto& g : gluings) {
    for (const SideRef& s : {g.a, g.b})
      if (s.square < 1 || s.square > n_squares)
        throw SurfaceError("square index out of range in gluing " + to_string(g.a) + " " + to_string(g.b));
    if (g.a == g.b) throw SurfaceError("side " + to_string(g.a) + " glued to itself");
    g = canonical(g);
  }
  std::sort(gluings.begin(), gluings.end());
  gluings_ = std::move(gluings);

  slot_partner_.assign(static_cast<std::size_t>(n_squares) * 4, -1);
  for (std::size_t i = 0; i < gluings_.size(); ++i) {
    for (const SideRef& s : {gluings_[i].a, gluings_[i].b}) {
      int& slot = slot_partner_[slot_index(s)];
      if (slot != -1) throw SurfaceError("side " + to_string(s) + " glued more than once");
      slot = static_cast<int>(i);
    }
  }

  // Corner classes: corner (sq, c) has id (sq-1)*4 + c. Shared corners inside the
  // domain are already expressed as gluings, so gluings alone generate the relation.
  auto corner_id = [](int sq, Corner c) { return static_cast<std::size_t>((sq - 1) * 4 + static_cast<int>(c)); };
  DisjointSets corners(static_cast<std::size_t>(n_squares) * 4);
  for (const Gluing& g : gluings_) {
    auto [a1, a2] = side_endpoints(g.a.side);
    auto [b1, b2] = side_endpoints(g.b.side);
    if (g.reversed) std::swap(b1, b2);
    corners.unite(corner_id(g.a.square, a1), corner_id(g.b.square, b1));
    corners.unite(corner_id(g.a.square, a2), corner_id(g.b.square, b2));
  }

  std::map<std::size_t, VertexOrbit> by_root;
  for (int sq = 1; sq <= n_squares; ++sq) {
    for (int c = 0; c < 4; ++c) {
      by_root[corners.find(corner_id(sq, static_cast<Corner>(c)))].corners.push_back({sq, static_cast<Corner>(c)});
    }
  }
  for (auto& [root, orbit] : by_root) {
    std::sort(orbit.corners.begin(), orbit.corners.end());
    std::set<int> squares;
    bool interior = true;
    for (const CornerRef& cr : orbit.corners) {
      squares.insert(cr.square);
      for (int s = 0; s < 4; ++s) {
        Side side = static_cast<Side>(s);
        if (corner_on_side(cr.corner, side) && !is_glued({cr.square, side})) interior = false;
      }
    }
    orbit.interior = interior;
    orbit.incident_squares.assign(squares.begin(), squares.end());
    orbits_.push_back(std::move(orbit));
  }
  // Orbits are ordered by their smallest corner, which is independent of DSU internals.
  std::sort(orbits_.begin(), orbits_.end(),
            [](const VertexOrbit& x, const VertexOrbit& y) { return x.corners.front() < y.corners.front(); });

  std::set<std::pair<int, int>> edges;
  for (const Gluing& g : gluings_) {
    if (g.a.square == g.b.square) continue;
    edges.insert(std::minmax(g.a.square, g.b.square));
  }
  adjacency_.n_vertices = n_squares;
  adjacency_.edges.assign(edges.begin(), edges.end());
  adjacency_.neighbors.assign(n_squares, {});
  for (auto [u, v] : adjacency_.edges) {
    adjacency_.neighbors[u - 1].push_back(v);
    adjacency_.neighbors[v - 1].push_back(u);
  }
  for (auto& nb : adjacency_.neighbors) std::sort(nb.begin(), nb.end());

  const int glued_pairs = static_cast<int>(gluings_.size());
  const int edge_count = glued_pairs + (4 * n_squares - 2 * glued_pairs);
  euler_ = static_cast<int>(orbits_.size()) - edge_count + n_squares;
}

bool SquareTiledSurface::is_glued(SideRef slot) const {
  if (slot.square < 1 || slot.square > n_squares_) return false;
  return slot_partner_[slot_index(slot)] != -1;
}

std::optional<Gluing> SquareTiledSurface::gluing_at(SideRef slot) const {
  if (!is_glued(slot)) return std::nullopt;
  return gluings_[slot_partner_[slot_index(slot)]];
}

std::vector<VertexOrbit> SquareTiledSurface::interior_orbits() const {
  std::vector<VertexOrbit> out;
  std::copy_if(orbits_.begin(), orbits_.end(), std::back_inserter(out), [](const VertexOrbit& o) { return o.interior; });
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw SurfaceError(std::string(what) + " must be at least 1");
}

std::vector<CellPosition> grid_layout(int rows, int cols) {
  std::vector<CellPosition> out;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.push_back({r, c});
  return out;
}

std::vector<Gluing> grid_gluings(int rows, int cols) {
  auto idx = [cols](int r, int c) { return r * cols + c + 1; };
  std::vector<Gluing> g;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) g.push_back({{idx(r, c), Side::E}, {idx(r, c + 1), Side::W}, false});
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) g.push_back({{idx(r, c), Side::S}, {idx(r + 1, c), Side::N}, false});
  return g;
}

std::vector<Gluing> mobius_gluings(int n) {
  std::vector<Gluing> g = grid_gluings(1, n);
  for (int j = 1; j <= n; ++j) g.push_back({{j, Side::N}, {n + 1 - j, Side::S}, true});
  return g;
}

}  // namespace

SquareTiledSurface build_rectangle(int rows, int cols) {
  require_positive(rows, "rows");
  require_positive(cols, "cols");
  return SquareTiledSurface(rows * cols, grid_gluings(rows, cols),
                            "rectangle:" + std::to_string(rows) + "x" + std::to_string(cols), grid_layout(rows, cols));
}

SquareTiledSurface build_annulus(int cols) {
  require_positive(cols, "cols");
  auto g = grid_gluings(2, cols);
  for (int c = 1; c <= cols; ++c) g.push_back({{c, Side::N}, {cols + c, Side::S}, false});
  return SquareTiledSurface(2 * cols, std::move(g), "annulus:" + std::to_string(cols), grid_layout(2, cols));
}

SquareTiledSurface build_torus(int rows, int cols) {
  require_positive(rows, "rows");
  require_positive(cols, "cols");
  auto g = grid_gluings(rows, cols);
  for (int c = 1; c <= cols; ++c) g.push_back({{c, Side::N}, {(rows - 1) * cols + c, Side::S}, false});
  for (int r = 0; r < rows; ++r) g.push_back({{r * cols + cols, Side::E}, {r * cols + 1, Side::W}, false});
  return SquareTiledSurface(rows * cols, std::move(g), "torus:" + std::to_string(rows) + "x" + std::to_string(cols),
                            grid_layout(rows, cols));
}

SquareTiledSurface build_mobius(int n) {
  require_positive(n, "n");
  return SquareTiledSurface(n, mobius_gluings(n), "mobius:" + std::to_string(n), grid_layout(1, n));
}

SquareTiledSurface build_klein(int n) {
  require_positive(n, "n");
  auto g = mobius_gluings(n);
  g.push_back({{1, Side::W}, {n, Side::E}, false});
  return SquareTiledSurface(n, std::move(g), "klein:" + std::to_string(n), grid_layout(1, n));
}

SquareTiledSurface build_projective(int n) {
  require_positive(n, "n");
  auto g = mobius_gluings(n);
  g.push_back({{1, Side::W}, {n, Side::E}, true});
  return SquareTiledSurface(n, std::move(g), "projective:" + std::to_string(n), grid_layout(1, n));
}

SquareTiledSurface build_staircase(int steps) {
  require_positive(steps, "steps");
  const int m = 2 * steps - 1;
  // right[i] / up[i]: square glued to the east / north side of square i.
  std::vector<int> right(m + 1), up(m + 1);
  for (int i = 1; i <= m; ++i) right[i] = up[i] = i;
  for (int i = 1; i < steps; ++i) {
    right[2 * i - 1] = 2 * i;
    right[2 * i] = 2 * i - 1;
    up[2 * i] = 2 * i + 1;
    up[2 * i + 1] = 2 * i;
  }
  std::vector<Gluing> g;
  for (int i = 1; i <= m; ++i) {
    g.push_back({{i, Side::E}, {right[i], Side::W}, false});
    g.push_back({{i, Side::N}, {up[i], Side::S}, false});
  }
  std::vector<CellPosition> layout(m);
  for (int i = 1; i <= steps; ++i) {
    layout[2 * i - 2] = {steps - i, i - 1};
    if (2 * i - 1 < m) layout[2 * i - 1] = {steps - i, i};
  }
  SquareTiledSurface s(m, std::move(g), "staircase:" + std::to_string(steps), std::move(layout));
  if (s.orbits().size() != 1) throw SurfaceError("staircase construction did not close to a single vertex");
  return s;
}

}  // namespace nurikabe
