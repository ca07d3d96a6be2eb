#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nurikabe/surface.hpp"

namespace nurikabe {

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which interior vertices count as whirlpools: only those of square-degree 4
/// (`square`), or every interior vertex (`loop`).
enum class Rule { square, loop };

std::string_view to_string(Rule r);
Rule parse_rule(std::string_view s);

/// Water/land assignment over squares; water is the marked color.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n_squares) : water_(static_cast<std::size_t>(n_squares), false) {}
  Coloring(int n_squares, std::initializer_list<int> water_squares);
  static Coloring from_squares(int n_squares, const std::vector<int>& water_squares);
  /// Square i is water iff bit (i-1) of `mask` is set.
  static Coloring from_mask(int n_squares, std::uint64_t mask);

  int size() const noexcept { return static_cast<int>(water_.size()); }
  bool is_water(int square) const { return water_.at(static_cast<std::size_t>(square - 1)); }
  void set_water(int square, bool water) { water_.at(static_cast<std::size_t>(square - 1)) = water; }
  std::vector<int> water_squares() const;
  int water_count() const;
  std::uint64_t to_mask() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<bool> water_;
};

struct ValidityReport {
  bool connected = false;
  std::vector<VertexOrbit> violating_orbits;
  std::vector<std::vector<int>> islands;  // each sorted; ordered by smallest square
  bool valid = false;
};

struct Clue {
  int square = 0;
  int size = 0;
};

bool water_connected(const SquareTiledSurface& surface, const Coloring& coloring);
std::vector<VertexOrbit> whirlpool_orbits(const SquareTiledSurface& surface, const Coloring& coloring, Rule rule);
std::vector<std::vector<int>> islands(const SquareTiledSurface& surface, const Coloring& coloring);
ValidityReport is_valid(const SquareTiledSurface& surface, const Coloring& coloring, Rule rule);

/// Every island holds exactly one clue equal to its size. Throws RuleError for a
/// clue on water, out of range, or two clues on one square.
bool check_clues(const SquareTiledSurface& surface, const Coloring& coloring, const std::vector<Clue>& clues);

void validate_clues(const SquareTiledSurface& surface, const std::vector<Clue>& clues);

}  // namespace nurikabe
