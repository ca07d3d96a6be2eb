#pragma once

// Closed forms and recursions for the counts of valid colorings on 2 x k
// rectangles and 1 x n Moebius strips, Klein bottles and projective planes,
// plus a verifier that compares them against exhaustive enumeration.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nurikabe/enumeration.hpp"
#include "nurikabe/rules.hpp"

namespace nurikabe {

class SequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Formula {
  rectangle_count,          // N_closed: 6*2^k - 3k - 5
  jacobsthal,               // J_closed: (2^k - (-1)^k) / 3
  last_column_one_water,    // Nk1_closed: 2^(k+1) - 2
  last_column_two_water,    // Nk2_closed: 2^k - 1
  one_water_recurrence3,    // a_rec3: a_k = 2a_{k-1} + a_{k-2} - 2a_{k-3}
  one_water_recurrence2,    // a_rec2: a_k = a_{k-1} + 2a_{k-2} + 4
  bicolumn_recurrence,      // b_rec: b_k = b_{k-1} + 2b_{k-2}, b_2 = b_3 = 2
  square_rule,              // square_thm
  loop_mobius,              // loop_mobius_thm
  loop_klein,               // loop_klein_thm
  loop_klein_chain,         // loop_klein_lemma_chain (enumeration-backed)
  loop_mobius_even_closed,  // A213387_form, n = 2k: 5*2^k - 3k - 4
  loop_mobius_odd_closed,   // A123203_form, n = 2k+1: 2^(k+3) - 3(k+2)
};

/// Stable identifier used on the command line and in reports ("N_closed", ...).
std::string_view formula_id(Formula f);
Formula parse_formula(std::string_view id);
const std::vector<Formula>& all_formulas();

/// Exact evaluation. Recursions are seeded with a_1 = 2, a_2 = 6, a_3 = 14 and
/// b_2 = b_3 = 2. Throws SequenceError below a formula's range and
/// std::overflow_error once a value leaves int64. loop_klein_chain enumerates,
/// so it honours `options`.
std::int64_t eval(Formula f, int n, const EnumerationOptions& options = {});

/// Number of valid loop-rule Klein bottles computed as (valid loop Moebius strips)
/// minus (those with squares 1 and n both water). Requires n >= 2.
std::int64_t loop_klein_lemma_chain(int n, const EnumerationOptions& options = {});

enum class Family {
  rectangle,   // 2 x k rectangles
  annulus,     // 2 x k annuli
  mobius,
  klein,
  projective,
  last_one,    // 2 x k rectangles with one water square in column k
  last_two,    // ... with column k fully water
  bicolumn,    // ... with column 1 fully water and one water square in column k
};

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

/// Oracle count for a family member of size n (k for rectangle-like families).
std::uint64_t oracle_count(Family family, Rule rule, int n, const EnumerationOptions& options = {});

/// Formulas that claim to equal the oracle for (family, rule, n).
std::vector<Formula> applicable_formulas(Family family, Rule rule, int n);

struct FormulaValue {
  Formula formula;
  std::int64_t value = 0;
  bool agrees = false;
};

struct CountRow {
  int n = 0;
  std::uint64_t oracle = 0;
  std::vector<FormulaValue> values;
};

struct CountReport {
  Family family = Family::rectangle;
  Rule rule = Rule::loop;
  std::vector<CountRow> rows;

  int disagreements() const;
  bool all_agree() const { return disagreements() == 0; }
};

CountReport verify(Family family, Rule rule, int min_n, int max_n, const EnumerationOptions& options = {});

/// Fixed-width table: one row per n, disagreements marked with '!'.
std::string format_report(const CountReport& report);
/// One JSON object per row.
std::string format_report_json_lines(const CountReport& report);

/// OEIS b-file text: "n a(n)" per line, ascending, newline-terminated.
std::string bfile(Formula f, int min_n, int max_n, const EnumerationOptions& options = {});
std::string bfile(Family family, Rule rule, int min_n, int max_n, const EnumerationOptions& options = {});

}  // namespace nurikabe
