#pragma once

// Cutting maps between 1 x n Moebius strip colorings and 2 x k rectangle
// colorings, and an exhaustive checker for the bijections they induce.
//
// Rectangle colorings live on build_rectangle(2, k): cell (row, col) is square
// (row - 1) * k + col. Rectangular reduction sends strip square j to cell (1, j)
// and strip square 2k+1-j to cell (2, j), so the central pair {k, k+1} becomes
// the last column and the end pair {1, 2k} the first.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nurikabe/enumeration.hpp"
#include "nurikabe/rules.hpp"

namespace nurikabe {

int rect_square(int k, int row, int col);

/// Strip of even length 2k -> 2 x k rectangle.
Coloring red(const Coloring& strip);
Coloring red_inverse(const Coloring& rect);

struct Contraction {
  Coloring strip;            // length 2k
  bool central_water = false;
};

/// Strip of odd length 2k+1 -> strip of length 2k with the central square excised.
Contraction contr(const Coloring& strip);
Coloring contr_inverse(const Coloring& strip, bool central_water);

// Mask forms of the same maps (bit j-1 = square j).
std::uint64_t red_mask(std::uint64_t strip, int strip_length);
std::uint64_t red_inverse_mask(std::uint64_t rect, int k);
std::pair<std::uint64_t, bool> contr_mask(std::uint64_t strip, int strip_length);
std::uint64_t contr_inverse_mask(std::uint64_t strip, int strip_length, bool central_water);

enum class BijectionMap {
  square_even,         // red: square-valid strips of length 2k -> all valid rectangles
  square_odd,          // red o contr: square-valid strips of length 2k+1 -> rectangles, tagged by central color
  loop_even,           // red: loop-valid strips of length 2k -> rectangles with last column not all water
  loop_odd,            // red o contr: loop-valid strips of length 2k+1 -> tagged rectangles
  central_land_square, // red o contr restricted to central land, square rule -> all valid rectangles
  central_land_loop,   // same under the loop rule
};

std::string_view to_string(BijectionMap m);
BijectionMap parse_bijection_map(std::string_view s);
const std::vector<BijectionMap>& all_bijection_maps();

struct BijectionReport {
  BijectionMap map = BijectionMap::square_even;
  int k = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t target_size = 0;
  /// Named pieces of the target and their sizes; they sum to target_size.
  std::vector<std::pair<std::string, std::uint64_t>> target_parts;
  bool image_in_target = false;
  bool injective = false;
  bool surjective = false;
  /// Strip masks whose image falls outside the target or collides with another image.
  std::vector<std::uint64_t> counterexamples;
  /// Target elements (tag << 2k | rectangle mask) nobody maps to.
  std::vector<std::uint64_t> uncovered;

  bool passed() const { return image_in_target && injective && surjective && domain_size == target_size; }
};

BijectionReport check_bijection(BijectionMap map, int k, const EnumerationOptions& options = {});

std::string format_bijection_report(const BijectionReport& report);

}  // namespace nurikabe
