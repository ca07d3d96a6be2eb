#pragma once

// Square-tiled surfaces: a set of unit squares plus a partial involution on
// their sides. Orientation-reversing gluings are allowed, so Moebius strips,
// Klein bottles and projective planes fit the same representation as
// rectangles, annuli and tori.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nurikabe {

/// Thrown for structurally invalid surfaces and bad builder arguments.
class SurfaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_surface; carries the 1-based line number of the offending directive.
class ParseError : public SurfaceError {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class Side : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };
enum class Corner : std::uint8_t { NW = 0, NE = 1, SE = 2, SW = 3 };

char side_char(Side s);
std::string_view corner_name(Corner c);
std::optional<Side> side_from_char(char c);

// Endpoints of a side in the drawing frame of the fundamental domain:
// N = (NW, NE), S = (SW, SE) left to right; W = (NW, SW), E = (NE, SE) top to bottom.
std::pair<Corner, Corner> side_endpoints(Side s);

/// One side slot of one square. Squares are 1-based.
struct SideRef {
  int square = 0;
  Side side = Side::N;

  // Slot order is (square, N < E < S < W); canonical serialization relies on it.
  auto operator<=>(const SideRef&) const = default;
};

struct CornerRef {
  int square = 0;
  Corner corner = Corner::NW;
  auto operator<=>(const CornerRef&) const = default;
};

/// Identification of two side slots. When `reversed` is set the first endpoint
/// of `a` is matched with the second endpoint of `b` and vice versa.
struct Gluing {
  SideRef a;
  SideRef b;
  bool reversed = false;

  auto operator<=>(const Gluing&) const = default;
};

struct VertexOrbit {
  std::vector<CornerRef> corners;     // sorted
  bool interior = false;
  std::vector<int> incident_squares;  // sorted, distinct

  int square_degree() const { return static_cast<int>(incident_squares.size()); }
  /// Bit (i-1) set for every incident square i. Only meaningful for surfaces of <= 64 squares.
  std::uint64_t square_mask() const;
};

/// Simple graph on squares: no loops, no parallel edges.
struct AdjacencyGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, sorted
  std::vector<std::vector<int>> neighbors; // neighbors[i-1], sorted

  bool adjacent(int u, int v) const;
  bool connected() const;
};

/// Cell position used only for drawing. Row 0 is the top row.
struct CellPosition {
  int row = 0;
  int col = 0;
  auto operator<=>(const CellPosition&) const = default;
};

/// Immutable surface. Orbits, adjacency and Euler characteristic are computed
/// once at construction, so instances may be shared freely between threads.
class SquareTiledSurface {
 public:
  /// Validates the gluing relation (in-range squares, no self-slot, each slot
  /// glued at most once). An empty `layout` places the squares in one row.
  SquareTiledSurface(int n_squares, std::vector<Gluing> gluings, std::string name = {},
                     std::vector<CellPosition> layout = {});

  int size() const noexcept { return n_squares_; }
  const std::string& name() const noexcept { return name_; }
  /// Canonical form: a < b inside each gluing, list sorted by (a, b).
  const std::vector<Gluing>& gluings() const noexcept { return gluings_; }
  const std::vector<VertexOrbit>& orbits() const noexcept { return orbits_; }
  const AdjacencyGraph& adjacency() const noexcept { return adjacency_; }
  int euler_characteristic() const noexcept { return euler_; }
  const std::vector<CellPosition>& layout() const noexcept { return layout_; }

  bool is_glued(SideRef slot) const;
  std::optional<Gluing> gluing_at(SideRef slot) const;
  std::vector<VertexOrbit> interior_orbits() const;

 private:
  int slot_index(SideRef s) const { return (s.square - 1) * 4 + static_cast<int>(s.side); }

  int n_squares_;
  std::vector<Gluing> gluings_;
  std::string name_;
  std::vector<CellPosition> layout_;
  std::vector<int> slot_partner_;  // index into gluings_, or -1
  std::vector<VertexOrbit> orbits_;
  AdjacencyGraph adjacency_;
  int euler_ = 0;
};

// Free-function views of the derived data.
inline const std::vector<VertexOrbit>& vertex_orbits(const SquareTiledSurface& s) { return s.orbits(); }
inline const AdjacencyGraph& adjacency(const SquareTiledSurface& s) { return s.adjacency(); }
inline int euler_characteristic(const SquareTiledSurface& s) { return s.euler_characteristic(); }

// Builders. Squares of a rows x cols grid are numbered row-major from the top left.
SquareTiledSurface build_rectangle(int rows, int cols);
/// 2 x cols grid with the top edge of row 1 glued to the bottom edge of row 2.
SquareTiledSurface build_annulus(int cols);
SquareTiledSurface build_torus(int rows, int cols);
/// 1 x n strip, (j, N) glued to (n+1-j, S) reversed.
SquareTiledSurface build_mobius(int n);
/// Moebius strip plus (1, W) glued to (n, E).
SquareTiledSurface build_klein(int n);
/// Moebius strip plus (1, W) glued to (n, E) reversed.
SquareTiledSurface build_projective(int n);
/// Closed orientable surface with a single vertex, made of 2*steps - 1 squares
/// arranged as an alternating right/up chain.
SquareTiledSurface build_staircase(int steps);

/// Parses the line format: `squares <n>`, `glue <i>.<SIDE> <j>.<SIDE> [rev]`, `#` comments.
SquareTiledSurface parse_surface(std::string_view text);
/// Canonical text: optional `# <name>` line, `squares <n>`, then gluings by (min slot, max slot).
std::string serialize_surface(const SquareTiledSurface& surface);

std::string to_string(SideRef s);

}  // namespace nurikabe
