#pragma once

#include <cstdint>
#include <vector>

#include "nurikabe/enumeration.hpp"
#include "nurikabe/rules.hpp"
#include "nurikabe/surface.hpp"

namespace nurikabe {

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// All colorings that are valid under `rule` and satisfy `clues`, as ascending
/// water masks. Depth-first over squares in index order; clue squares are forced
/// land, and a branch is cut as soon as a decided whirlpool, an over-full or
/// multi-clue island, a sealed island of the wrong size, or a sealed water
/// component that cannot reach the rest of the water appears.
std::vector<std::uint64_t> solve(const SquareTiledSurface& surface, Rule rule, const std::vector<Clue>& clues,
                                 const EnumerationOptions& options = {}, SolveStats* stats = nullptr);

}  // namespace nurikabe
