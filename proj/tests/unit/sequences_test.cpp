#include "doctest.h"
#include "nurikabe/sequences.hpp"

using namespace nurikabe;

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

}  // namespace

TEST_CASE("formula ids round-trip") {
  for (Formula f : all_formulas()) CHECK(parse_formula(formula_id(f)) == f);
  CHECK(all_formulas().size() == 13);
  CHECK_THROWS_AS(parse_formula("nope"), SequenceError);
}

TEST_CASE("closed forms by direct arithmetic") {
  for (int k = 1; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(eval(Formula::rectangle_count, k) == 6 * pow2(k) - 3 * k - 5);
    CHECK(eval(Formula::jacobsthal, k) == (pow2(k) - (k % 2 ? -1 : 1)) / 3);
    CHECK(eval(Formula::last_column_one_water, k) == pow2(k + 1) - 2);
    CHECK(eval(Formula::last_column_two_water, k) == pow2(k) - 1);
    CHECK(eval(Formula::one_water_recurrence3, k) == pow2(k + 1) - 2);
    CHECK(eval(Formula::one_water_recurrence2, k) == pow2(k + 1) - 2);
    if (k >= 2) CHECK(eval(Formula::bicolumn_recurrence, k) == 2 * eval(Formula::jacobsthal, k - 1));
  }
}

TEST_CASE("strip formulas against the frozen reference") {
  const std::int64_t square[] = {2, 4, 8, 13, 23, 34, 56, 79, 125, 172, 266, 361, 551, 742};
  const std::int64_t loop_mobius[] = {2, 3, 7, 10, 20, 27, 49, 64, 110, 141, 235, 298, 488, 615};
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    auto i = static_cast<std::size_t>(n - 1);
    CHECK(eval(Formula::square_rule, n) == square[i]);
    CHECK(eval(Formula::loop_mobius, n) == loop_mobius[i]);
    const int k = n / 2;
    if (n % 2 == 0)
      CHECK(eval(Formula::loop_mobius_even_closed, n) == 5 * pow2(k) - 3 * k - 4);
    else
      CHECK(eval(Formula::loop_mobius_odd_closed, n) == pow2(k + 3) - 3 * (k + 2));
  }
  CHECK_THROWS_AS(eval(Formula::loop_mobius_even_closed, 5), SequenceError);
  CHECK_THROWS_AS(eval(Formula::loop_mobius_odd_closed, 6), SequenceError);
}

TEST_CASE("printed loop klein values") {
  // loop_klein_thm values; from n = 7 on they differ from exhaustive counts.
  const std::int64_t printed[] = {1, 3, 6, 7, 15, 22, 36, 55, 85, 120, 182, 257};
  for (int n = 1; n <= 12; ++n) CHECK(eval(Formula::loop_klein, n) == printed[n - 1]);
  const std::int64_t counted[] = {3, 6, 7, 15, 22, 40, 51, 89, 116, 194, 245};
  for (int n = 2; n <= 12; ++n) CHECK(eval(Formula::loop_klein_chain, n) == counted[n - 2]);
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(eval(Formula::rectangle_count, 70), std::overflow_error);
  CHECK_THROWS_AS(eval(Formula::rectangle_count, 0), SequenceError);
}

TEST_CASE("verify flags exactly the diverging rows") {
  auto report = verify(Family::klein, Rule::loop, 1, 9);
  CHECK(report.rows.size() == 9);
  CHECK(report.disagreements() == 3);
  for (const auto& row : report.rows)
    for (const auto& v : row.values)
      if (v.formula == Formula::loop_klein) CHECK(v.agrees == (row.n <= 6));
  auto text = format_report(report);
  CHECK(text.find("# family=klein rule=loop") == 0);
  CHECK(text.find("36!") != std::string::npos);
  CHECK(text.find("# disagreements: 3") != std::string::npos);
}

TEST_CASE("verify agrees where the formulas hold") {
  CHECK(verify(Family::rectangle, Rule::square, 1, 8).all_agree());
  CHECK(verify(Family::mobius, Rule::loop, 1, 12).all_agree());
  CHECK(verify(Family::mobius, Rule::square, 1, 12).all_agree());
  CHECK(verify(Family::projective, Rule::square, 1, 12).all_agree());
  CHECK(verify(Family::last_one, Rule::square, 1, 8).all_agree());
  CHECK(verify(Family::last_two, Rule::square, 1, 8).all_agree());
  CHECK(verify(Family::bicolumn, Rule::square, 2, 8).all_agree());
}

TEST_CASE("json lines carry one record per row") {
  auto text = format_report_json_lines(verify(Family::mobius, Rule::loop, 3, 4));
  CHECK(text ==
        "{\"family\":\"mobius\",\"rule\":\"loop\",\"n\":3,\"oracle\":7,\"formulas\":{\"loop_mobius_thm\":"
        "{\"value\":7,\"agree\":true},\"A123203_form\":{\"value\":7,\"agree\":true}}}\n"
        "{\"family\":\"mobius\",\"rule\":\"loop\",\"n\":4,\"oracle\":10,\"formulas\":{\"loop_mobius_thm\":"
        "{\"value\":10,\"agree\":true},\"A213387_form\":{\"value\":10,\"agree\":true}}}\n");
}

TEST_CASE("b-files") {
  CHECK(bfile(Formula::jacobsthal, 1, 6) == "1 1\n2 1\n3 3\n4 5\n5 11\n6 21\n");
  CHECK(bfile(Family::mobius, Rule::loop, 1, 4) == "1 2\n2 3\n3 7\n4 10\n");
  CHECK_THROWS(bfile(Formula::jacobsthal, 5, 4));
}

TEST_CASE("family names") {
  for (auto name : {"rectangle", "annulus", "mobius", "klein", "projective", "last-one", "last-two", "bicolumn"})
    CHECK(to_string(parse_family(name)) == name);
  CHECK_THROWS_AS(parse_family("sphere"), SequenceError);
}
