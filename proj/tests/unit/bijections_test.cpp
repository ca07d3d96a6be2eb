#include "doctest.h"
#include "nurikabe/bijections.hpp"

using namespace nurikabe;

TEST_CASE("rectangle cell numbering") {
  CHECK(rect_square(3, 1, 1) == 1);
  CHECK(rect_square(3, 1, 3) == 3);
  CHECK(rect_square(3, 2, 1) == 4);
  CHECK_THROWS(rect_square(3, 3, 1));
}

TEST_CASE("red folds the strip around its middle") {
  // Strip 1..6: 1,2,3 go to the top row, 6,5,4 to the bottom row.
  CHECK(red(Coloring(6, {3, 4})).water_squares() == std::vector<int>{3, 6});
  CHECK(red(Coloring(6, {1, 6})).water_squares() == std::vector<int>{1, 4});
  CHECK(red(Coloring(6, {5})).water_squares() == std::vector<int>{5});
  CHECK_THROWS(red(Coloring(5)));
}

TEST_CASE("contr removes the central square") {
  auto c = contr(Coloring(7, {3, 4, 5}));
  CHECK(c.central_water);
  CHECK(c.strip.water_squares() == std::vector<int>{3, 4});
  CHECK(contr_inverse(c.strip, true) == Coloring(7, {3, 4, 5}));
  CHECK_THROWS(contr(Coloring(6)));
}

TEST_CASE("round trips up to length 14") {
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      auto c = Coloring::from_mask(n, m);
      if (n % 2 == 0) {
        REQUIRE(red_inverse(red(c)) == c);
        REQUIRE(red(red_inverse(c)) == c);
        REQUIRE(red_inverse_mask(red_mask(m, n), n / 2) == m);
        REQUIRE(red_mask(m, n) == red(c).to_mask());
      } else {
        auto [strip, central] = contr_mask(m, n);
        REQUIRE(contr_inverse_mask(strip, n - 1, central) == m);
        auto x = contr(c);
        REQUIRE(contr_inverse(x.strip, x.central_water) == c);
        REQUIRE(x.strip.to_mask() == strip);
      }
    }
  }
}

TEST_CASE("every induced bijection holds up to k = 5") {
  for (BijectionMap m : all_bijection_maps()) {
    CHECK(parse_bijection_map(to_string(m)) == m);
    for (int k = 1; k <= 5; ++k) {
      auto r = check_bijection(m, k);
      CAPTURE(to_string(m));
      CAPTURE(k);
      CHECK(r.passed());
      CHECK(r.counterexamples.empty());
      CHECK(r.uncovered.empty());
      std::uint64_t sum = 0;
      for (const auto& part : r.target_parts) sum += part.second;
      CHECK(sum == r.target_size);
    }
  }
}

TEST_CASE("odd loop strips of length 3 split as 4 + 2 + 1") {
  auto r = check_bijection(BijectionMap::loop_odd, 1);
  CHECK(r.domain_size == 7);
  REQUIRE(r.target_parts.size() == 3);
  CHECK(r.target_parts[0].second == 4);
  CHECK(r.target_parts[1].second == 2);
  CHECK(r.target_parts[2].second == 1);
  auto text = format_bijection_report(r);
  CHECK(text.find("result=PASS") != std::string::npos);
}
