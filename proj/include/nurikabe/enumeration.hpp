#pragma once

// Exhaustive enumeration of valid colorings. Colorings are 64-bit masks where
// bit (i-1) marks square i as water; they are visited in ascending integer
// order, split into contiguous chunks that workers pick up and that are
// reduced in chunk order, so every result is independent of the worker count.

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nurikabe/rules.hpp"
#include "nurikabe/surface.hpp"

namespace nurikabe {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Constraint {
  std::vector<int> forced_water;
  std::vector<int> forced_land;

  bool empty() const { return forced_water.empty() && forced_land.empty(); }
};

std::string to_string(const Constraint& c);

struct EnumerationOptions {
  unsigned workers = 1;
  int size_cap = 26;
  /// Lifts size_cap; 63 squares remains the hard limit of the mask representation.
  bool cap_override = false;
  std::uint64_t listing_cap = std::uint64_t{1} << 20;
  /// Chunks handed out per worker; more chunks balance better.
  unsigned chunks_per_worker = 16;
};

struct EnumerationResult {
  std::uint64_t count = 0;
  std::optional<std::vector<std::uint64_t>> colorings;  // ascending when present
  std::string surface;
  Rule rule = Rule::loop;
  Constraint constraint;
};

/// Precompiled validity test for one (surface, rule) pair. Whirlpools are the
/// square masks of the relevant interior orbits; a coloring violates one when
/// (water & mask) == mask. Connectivity is a bitmask flood fill.
class ValidityKernel {
 public:
  ValidityKernel(const SquareTiledSurface& surface, Rule rule);

  int size() const noexcept { return n_; }
  std::uint64_t all_squares() const noexcept { return all_; }
  const std::vector<std::uint64_t>& whirlpool_masks() const noexcept { return whirlpools_; }
  std::uint64_t neighbors(int square) const { return neighbors_.at(static_cast<std::size_t>(square - 1)); }

  bool has_whirlpool(std::uint64_t water) const noexcept {
    for (std::uint64_t m : whirlpools_)
      if ((water & m) == m) return true;
    return false;
  }

  bool connected(std::uint64_t water) const noexcept {
    if (water == 0) return true;
    std::uint64_t reached = water & (~water + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t next = 0;
      do {
        next |= neighbors_[static_cast<std::size_t>(__builtin_ctzll(frontier))];
        frontier &= frontier - 1;
      } while (frontier != 0);
      frontier = next & water & ~reached;
      reached |= frontier;
    }
    return reached == water;
  }

  /// Component of `mask` containing the lowest set bit of `seed` (seed must be inside mask).
  std::uint64_t component(std::uint64_t mask, std::uint64_t seed) const noexcept;

  bool valid(std::uint64_t water) const noexcept { return !has_whirlpool(water) && connected(water); }

 private:
  int n_;
  std::uint64_t all_;
  std::vector<std::uint64_t> neighbors_;
  std::vector<std::uint64_t> whirlpools_;
};

std::uint64_t squares_to_mask(const std::vector<int>& squares, int n_squares);
std::vector<int> mask_to_squares(std::uint64_t mask);

EnumerationResult count_valid(const SquareTiledSurface& surface, Rule rule, const Constraint& constraint = {},
                              const EnumerationOptions& options = {});
EnumerationResult enumerate_valid(const SquareTiledSurface& surface, Rule rule, const Constraint& constraint = {},
                                  const EnumerationOptions& options = {});

/// Counts of valid 2 x k rectangles refined by the number of water squares in the
/// last column (k) and, for k >= 2, the first column.
struct RefinedCounts {
  int k = 0;
  std::uint64_t total = 0;
  std::uint64_t last0 = 0;
  std::uint64_t last1 = 0;
  std::uint64_t last2 = 0;
  std::optional<std::uint64_t> first2_last1;
  std::optional<std::uint64_t> first2_last2;
};

RefinedCounts refined_rectangle_counts(int k, const EnumerationOptions& options = {});

boost::rational<std::int64_t> validity_density(const SquareTiledSurface& surface, Rule rule,
                                               const EnumerationOptions& options = {});

}  // namespace nurikabe
