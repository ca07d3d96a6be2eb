#include "nurikabe/rules.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nurikabe/disjoint_sets.hpp"

namespace nurikabe {

std::string_view to_string(Rule r) { return r == Rule::square ? "square" : "loop"; }

Rule parse_rule(std::string_view s) {
  if (s == "square") return Rule::square;
  if (s == "loop") return Rule::loop;
  throw RuleError("unknown rule '" + std::string(s) + "' (expected square or loop)");
}

Coloring::Coloring(int n_squares, std::initializer_list<int> water_squares)
    : Coloring(from_squares(n_squares, std::vector<int>(water_squares))) {}

Coloring Coloring::from_squares(int n_squares, const std::vector<int>& water_squares) {
  Coloring c(n_squares);
  for (int sq : water_squares) {
    if (sq < 1 || sq > n_squares) throw RuleError("water square " + std::to_string(sq) + " out of range");
    c.set_water(sq, true);
  }
  return c;
}

Coloring Coloring::from_mask(int n_squares, std::uint64_t mask) {
  if (n_squares < 64 && (mask >> n_squares) != 0) throw RuleError("mask has bits beyond the square count");
  Coloring c(n_squares);
  for (int i = 0; i < n_squares && i < 64; ++i) c.water_[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return c;
}

std::vector<int> Coloring::water_squares() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (water_[static_cast<std::size_t>(i)]) out.push_back(i + 1);
  return out;
}

int Coloring::water_count() const { return static_cast<int>(std::count(water_.begin(), water_.end(), true)); }

std::uint64_t Coloring::to_mask() const {
  if (size() > 64) throw RuleError("coloring too large for a 64-bit mask");
  std::uint64_t m = 0;
  for (int i = 0; i < size(); ++i)
    if (water_[static_cast<std::size_t>(i)]) m |= std::uint64_t{1} << i;
  return m;
}

namespace {

void require_matching(const SquareTiledSurface& surface, const Coloring& coloring) {
  if (coloring.size() != surface.size())
    throw RuleError("coloring has " + std::to_string(coloring.size()) + " squares, surface has " +
                    std::to_string(surface.size()));
}

// Components of the squares with color `water`, restricted to adjacency edges inside that color.
DisjointSets color_components(const SquareTiledSurface& surface, const Coloring& coloring, bool water) {
  DisjointSets dsu(static_cast<std::size_t>(surface.size()));
  for (auto [u, v] : surface.adjacency().edges)
    if (coloring.is_water(u) == water && coloring.is_water(v) == water)
      dsu.unite(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  return dsu;
}

}  // namespace

bool water_connected(const SquareTiledSurface& surface, const Coloring& coloring) {
  require_matching(surface, coloring);
  auto water = coloring.water_squares();
  if (water.empty()) return true;
  DisjointSets dsu = color_components(surface, coloring, true);
  return dsu.set_size(static_cast<std::size_t>(water.front() - 1)) == water.size();
}

std::vector<VertexOrbit> whirlpool_orbits(const SquareTiledSurface& surface, const Coloring& coloring, Rule rule) {
  require_matching(surface, coloring);
  std::vector<VertexOrbit> out;
  for (const VertexOrbit& o : surface.orbits()) {
    if (!o.interior) continue;
    if (rule == Rule::square && o.square_degree() != 4) continue;
    if (std::all_of(o.incident_squares.begin(), o.incident_squares.end(),
                    [&](int sq) { return coloring.is_water(sq); }))
      out.push_back(o);
  }
  return out;
}

std::vector<std::vector<int>> islands(const SquareTiledSurface& surface, const Coloring& coloring) {
  require_matching(surface, coloring);
  DisjointSets dsu = color_components(surface, coloring, false);
  std::map<std::size_t, std::vector<int>> groups;
  for (int sq = 1; sq <= surface.size(); ++sq)
    if (!coloring.is_water(sq)) groups[dsu.find(static_cast<std::size_t>(sq - 1))].push_back(sq);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

ValidityReport is_valid(const SquareTiledSurface& surface, const Coloring& coloring, Rule rule) {
  ValidityReport r;
  r.connected = water_connected(surface, coloring);
  r.violating_orbits = whirlpool_orbits(surface, coloring, rule);
  r.islands = islands(surface, coloring);
  r.valid = r.connected && r.violating_orbits.empty();
  return r;
}

void validate_clues(const SquareTiledSurface& surface, const std::vector<Clue>& clues) {
  std::set<int> seen;
  for (const Clue& c : clues) {
    if (c.square < 1 || c.square > surface.size())
      throw RuleError("clue square " + std::to_string(c.square) + " out of range");
    if (c.size < 1) throw RuleError("clue size must be positive");
    if (!seen.insert(c.square).second) throw RuleError("two clues on square " + std::to_string(c.square));
  }
}

bool check_clues(const SquareTiledSurface& surface, const Coloring& coloring, const std::vector<Clue>& clues) {
  validate_clues(surface, clues);
  for (const Clue& c : clues)
    if (coloring.is_water(c.square)) throw RuleError("clue on water square " + std::to_string(c.square));

  std::map<int, int> clue_at;
  for (const Clue& c : clues) clue_at[c.square] = c.size;
  for (const auto& island : islands(surface, coloring)) {
    int found = 0;
    int value = 0;
    for (int sq : island) {
      if (auto it = clue_at.find(sq); it != clue_at.end()) {
        ++found;
        value = it->second;
      }
    }
    if (found != 1 || value != static_cast<int>(island.size())) return false;
  }
  return true;
}

}  // namespace nurikabe
