#include <random>

#include "doctest.h"
#include "nurikabe/enumeration.hpp"
#include "nurikabe/rules.hpp"
#include "support/oracle.hpp"

using namespace nurikabe;

TEST_CASE("coloring conversions") {
  Coloring c(5, {2, 5});
  CHECK(c.water_squares() == std::vector<int>{2, 5});
  CHECK(c.water_count() == 2);
  CHECK(c.to_mask() == 0b10010);
  CHECK(Coloring::from_mask(5, 0b10010) == c);
  CHECK(Coloring::from_squares(5, {5, 2}) == c);
  CHECK_THROWS(Coloring(3, {4}));
  CHECK_THROWS(Coloring::from_mask(3, 0b1000));
}

TEST_CASE("rule names") {
  CHECK(parse_rule("square") == Rule::square);
  CHECK(parse_rule("loop") == Rule::loop);
  CHECK(to_string(Rule::loop) == "loop");
  CHECK_THROWS_AS(parse_rule("cycle"), RuleError);
}

TEST_CASE("degree-2 orbit is a whirlpool only under the loop rule") {
  auto s = build_mobius(4);
  Coloring c(4, {2, 3});
  CHECK(water_connected(s, c));
  CHECK(whirlpool_orbits(s, c, Rule::square).empty());
  auto loops = whirlpool_orbits(s, c, Rule::loop);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].incident_squares == std::vector<int>{2, 3});
  CHECK(is_valid(s, c, Rule::square).valid);
  CHECK_FALSE(is_valid(s, c, Rule::loop).valid);
}

TEST_CASE("all water on a 2x2 block") {
  auto s = build_rectangle(2, 2);
  Coloring c(4, {1, 2, 3, 4});
  auto r = is_valid(s, c, Rule::square);
  CHECK(r.connected);
  CHECK(r.violating_orbits.size() == 1);
  CHECK(r.islands.empty());
  CHECK_FALSE(r.valid);
}

TEST_CASE("empty water is connected and valid") {
  auto s = build_klein(3);
  Coloring c(3);
  auto r = is_valid(s, c, Rule::loop);
  CHECK(r.connected);
  CHECK(r.valid);
  CHECK(r.islands == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("disconnected water") {
  auto s = build_rectangle(1, 5);
  Coloring c(5, {1, 3, 5});
  CHECK_FALSE(water_connected(s, c));
  CHECK(islands(s, c) == std::vector<std::vector<int>>{{2}, {4}});
  CHECK_FALSE(is_valid(s, c, Rule::loop).valid);
}

TEST_CASE("coloring size must match") {
  CHECK_THROWS_AS(is_valid(build_mobius(3), Coloring(4), Rule::loop), RuleError);
}

TEST_CASE("clue checks") {
  auto s = build_rectangle(2, 3);  // 1 2 3 / 4 5 6
  Coloring c(6, {2, 5});
  CHECK(check_clues(s, c, {{1, 2}, {3, 2}}));
  CHECK_FALSE(check_clues(s, c, {{1, 2}}));
  CHECK_FALSE(check_clues(s, c, {{1, 2}, {4, 2}, {3, 2}}));
  CHECK_FALSE(check_clues(s, c, {{1, 3}, {3, 2}}));
  CHECK_THROWS_AS(check_clues(s, c, {{2, 1}}), RuleError);
  CHECK_THROWS_AS(check_clues(s, c, {{7, 1}}), RuleError);
  CHECK_THROWS_AS(check_clues(s, c, {{1, 0}}), RuleError);
  CHECK_THROWS_AS(check_clues(s, c, {{1, 2}, {1, 2}}), RuleError);
}

TEST_CASE("rules agree with the brute-force reference on strips") {
  for (int n = 1; n <= 9; ++n) {
    for (auto kind : {oracle::Strip::mobius, oracle::Strip::klein, oracle::Strip::projective}) {
      auto model = oracle::strip(kind, n);
      auto s = kind == oracle::Strip::mobius ? build_mobius(n)
               : kind == oracle::Strip::klein ? build_klein(n)
                                              : build_projective(n);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto c = Coloring::from_mask(n, m);
        REQUIRE(is_valid(s, c, Rule::square).valid == oracle::valid(model, m, oracle::Whirl::square));
        REQUIRE(is_valid(s, c, Rule::loop).valid == oracle::valid(model, m, oracle::Whirl::loop));
      }
    }
  }
}

TEST_CASE("kernel matches rule functions on random colorings") {
  std::mt19937_64 rng(20261017);
  for (const auto& s : {build_torus(3, 4), build_staircase(4), build_klein(11), build_annulus(6), build_rectangle(4, 4)}) {
    for (Rule rule : {Rule::square, Rule::loop}) {
      ValidityKernel kernel(s, rule);
      for (int i = 0; i < 400; ++i) {
        std::uint64_t m = rng() & kernel.all_squares();
        auto c = Coloring::from_mask(s.size(), m);
        REQUIRE(kernel.valid(m) == is_valid(s, c, rule).valid);
        REQUIRE(kernel.connected(m) == water_connected(s, c));
      }
    }
  }
}

TEST_CASE("validity is monotone: removing water from a valid connected set keeps it whirlpool-free") {
  auto s = build_klein(8);
  for (std::uint64_t m = 0; m < 256; ++m) {
    auto c = Coloring::from_mask(8, m);
    if (!whirlpool_orbits(s, c, Rule::loop).empty()) continue;
    for (int sq = 1; sq <= 8; ++sq) {
      if (!c.is_water(sq)) continue;
      auto d = c;
      d.set_water(sq, false);
      REQUIRE(whirlpool_orbits(s, d, Rule::loop).empty());
    }
  }
}

TEST_CASE("rules agree on tori with both sides at least 2") {
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {2, 6}, {3, 3}, {3, 4}}) {
    auto s = build_torus(r, c);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) {
      auto col = Coloring::from_mask(s.size(), m);
      REQUIRE(is_valid(s, col, Rule::square).valid == is_valid(s, col, Rule::loop).valid);
    }
  }
}

TEST_CASE("a one-column torus separates the rules") {
  auto s = build_torus(2, 1);
  Coloring both(2, {1, 2});
  for (const auto& o : s.interior_orbits()) CHECK(o.square_degree() == 2);
  CHECK(is_valid(s, both, Rule::square).valid);
  CHECK_FALSE(is_valid(s, both, Rule::loop).valid);
}
