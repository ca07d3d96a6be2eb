#include "nurikabe/solver.hpp"

#include <algorithm>

namespace nurikabe {

namespace {

class Search {
 public:
  Search(const SquareTiledSurface& surface, Rule rule, const std::vector<Clue>& clues, SolveStats* stats)
      : kernel_(surface, rule), n_(surface.size()), stats_(stats) {
    clue_value_.assign(static_cast<std::size_t>(n_), 0);
    for (const Clue& c : clues) {
      clue_value_[static_cast<std::size_t>(c.square - 1)] = c.size;
      clue_mask_ |= std::uint64_t{1} << (c.square - 1);
    }
  }

  std::vector<std::uint64_t> run() {
    // Clue squares start as land.
    dfs(0, 0, clue_mask_);
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

 private:
  void dfs(int square, std::uint64_t water, std::uint64_t land) {
    if (stats_) ++stats_->nodes;
    if (!consistent(water, land)) return;
    while (square < n_ && ((land >> square) & 1U)) ++square;
    if (square == n_) {
      if (stats_) ++stats_->leaves;
      if (kernel_.valid(water) && islands_match(land)) solutions_.push_back(water);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << square;
    dfs(square + 1, water, land | bit);
    dfs(square + 1, water | bit, land);
  }

  bool consistent(std::uint64_t water, std::uint64_t land) const {
    if (kernel_.has_whirlpool(water)) return false;
    const std::uint64_t undecided = kernel_.all_squares() & ~water & ~land;

    if (water != 0) {
      // All water must fit in one component of the squares that could still be water.
      if ((water & ~kernel_.component(water | undecided, water)) != 0) return false;
    }

    std::uint64_t remaining = land;
    while (remaining != 0) {
      const std::uint64_t island = kernel_.component(land, remaining);
      remaining &= ~island;
      const std::uint64_t clues = island & clue_mask_;
      const int clue_count = __builtin_popcountll(clues);
      if (clue_count > 1) return false;
      const int size = __builtin_popcountll(island);
      std::uint64_t frontier = 0;
      for (std::uint64_t m = island; m != 0; m &= m - 1) frontier |= kernel_.neighbors(__builtin_ctzll(m) + 1);
      const bool sealed = (frontier & undecided) == 0;
      if (clue_count == 0) {
        if (sealed) return false;
        continue;
      }
      const int value = clue_value_[static_cast<std::size_t>(__builtin_ctzll(clues))];
      if (size > value) return false;
      if (sealed && size != value) return false;
      if (__builtin_popcountll(kernel_.component(land | undecided, island)) < value) return false;
    }
    return true;
  }

  bool islands_match(std::uint64_t land) const {
    std::uint64_t remaining = land;
    while (remaining != 0) {
      const std::uint64_t island = kernel_.component(land, remaining);
      remaining &= ~island;
      const std::uint64_t clues = island & clue_mask_;
      if (__builtin_popcountll(clues) != 1) return false;
      if (__builtin_popcountll(island) != clue_value_[static_cast<std::size_t>(__builtin_ctzll(clues))]) return false;
    }
    return true;
  }

  ValidityKernel kernel_;
  int n_;
  SolveStats* stats_;
  std::vector<int> clue_value_;
  std::uint64_t clue_mask_ = 0;
  std::vector<std::uint64_t> solutions_;
};

}  // namespace

std::vector<std::uint64_t> solve(const SquareTiledSurface& surface, Rule rule, const std::vector<Clue>& clues,
                                 const EnumerationOptions& options, SolveStats* stats) {
  if (surface.size() > 63) throw CapExceeded("solver supports at most 63 squares");
  if (surface.size() > options.size_cap && !options.cap_override)
    throw CapExceeded("surface has " + std::to_string(surface.size()) + " squares, above the cap of " +
                      std::to_string(options.size_cap) + " (override required)");
  validate_clues(surface, clues);
  return Search(surface, rule, clues, stats).run();
}

}  // namespace nurikabe
