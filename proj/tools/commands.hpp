#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nurikabe/enumeration.hpp"
#include "nurikabe/rules.hpp"
#include "nurikabe/surface.hpp"

namespace nurikabe::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kDisagreement = 2;

/// `<name>:<n>` or `<name>:<rows>x<cols>`; names: rectangle, annulus, torus,
/// mobius, klein, projective, staircase.
SquareTiledSurface parse_surface_ref(std::string_view ref);

/// `water=1,7 land=4`; several tokens may be given separately or space-joined.
Constraint parse_constraint(const std::vector<std::string>& tokens);

/// `square:size`, e.g. `1:6`.
Clue parse_clue(std::string_view token);

struct PuzzleSpec {
  std::string surface_ref;  // builder reference, or empty when spec_path is set
  std::string spec_path;
  std::vector<Clue> clues;
  Rule rule = Rule::loop;
};

/// Puzzle file: `surface <ref>` or `spec <path>`, `rule <square|loop>`, `clue <square> <size>`, `#` comments.
PuzzleSpec parse_puzzle(std::string_view text);

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nurikabe::cli
