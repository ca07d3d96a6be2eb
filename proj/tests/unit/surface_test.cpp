#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "nurikabe/surface.hpp"
#include "support/oracle.hpp"

using namespace nurikabe;

namespace {

// Interior orbits as a sorted multiset of incident-square sets.
std::multiset<std::set<int>> interior_sets(const SquareTiledSurface& s) {
  std::multiset<std::set<int>> out;
  for (const auto& o : s.interior_orbits()) out.insert(std::set<int>(o.incident_squares.begin(), o.incident_squares.end()));
  return out;
}

std::multiset<std::set<int>> interior_sets(const oracle::Model& m) {
  return {m.interior.begin(), m.interior.end()};
}

std::set<std::pair<int, int>> edge_set(const oracle::Model& m) {
  std::set<std::pair<int, int>> out;
  for (int a = 1; a <= m.n; ++a)
    for (int b : m.adjacent[static_cast<std::size_t>(a)])
      if (a < b) out.insert({a, b});
  return out;
}

std::set<std::pair<int, int>> edge_set(const SquareTiledSurface& s) {
  return {s.adjacency().edges.begin(), s.adjacency().edges.end()};
}

}  // namespace

TEST_CASE("mobius strip of length 4 has the expected orbits") {
  auto s = build_mobius(4);
  CHECK(s.size() == 4);
  CHECK(s.euler_characteristic() == 0);
  CHECK(s.orbits().size() == 5);
  std::multiset<std::set<int>> expected{{1, 2, 3, 4}, {1, 2, 3, 4}, {2, 3}};
  CHECK(interior_sets(s) == expected);
  int boundary = 0;
  for (const auto& o : s.orbits()) {
    if (o.interior) continue;
    ++boundary;
    CHECK(o.incident_squares == std::vector<int>{1, 4});
  }
  CHECK(boundary == 2);
}

TEST_CASE("klein bottle of length 7") {
  auto s = build_klein(7);
  std::multiset<std::set<int>> expected{{1, 2, 6, 7}, {1, 2, 6, 7}, {1, 7},     {2, 3, 5, 6},
                                        {2, 3, 5, 6}, {3, 4, 5},    {3, 4, 5}};
  CHECK(interior_sets(s) == expected);
  CHECK(s.orbits().size() == 7);
  CHECK(s.euler_characteristic() == 0);
}

TEST_CASE("strip orbits and adjacency match hand-derived geometry") {
  for (int n = 1; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(interior_sets(build_mobius(n)) == interior_sets(oracle::strip(oracle::Strip::mobius, n)));
    CHECK(interior_sets(build_klein(n)) == interior_sets(oracle::strip(oracle::Strip::klein, n)));
    CHECK(interior_sets(build_projective(n)) == interior_sets(oracle::strip(oracle::Strip::projective, n)));
    CHECK(edge_set(build_mobius(n)) == edge_set(oracle::strip(oracle::Strip::mobius, n)));
    CHECK(edge_set(build_klein(n)) == edge_set(oracle::strip(oracle::Strip::klein, n)));
    CHECK(edge_set(build_projective(n)) == edge_set(oracle::strip(oracle::Strip::projective, n)));
  }
}

TEST_CASE("two-row grids match hand-derived geometry") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(interior_sets(build_rectangle(2, k)) == interior_sets(oracle::two_row(k, false)));
    CHECK(interior_sets(build_annulus(k)) == interior_sets(oracle::two_row(k, true)));
    CHECK(edge_set(build_rectangle(2, k)) == edge_set(oracle::two_row(k, false)));
    CHECK(edge_set(build_annulus(k)) == edge_set(oracle::two_row(k, true)));
  }
  CHECK(build_annulus(5).interior_orbits().size() == 8);
  CHECK(build_annulus(1).interior_orbits().empty());
}

TEST_CASE("euler characteristics of the builders") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(build_mobius(n).euler_characteristic() == 0);
    CHECK(build_klein(n).euler_characteristic() == 0);
    CHECK(build_projective(n).euler_characteristic() == 1);
    CHECK(build_annulus(n).euler_characteristic() == 0);
    for (int m = 1; m <= 4; ++m) {
      CHECK(build_rectangle(m, n).euler_characteristic() == 1);
      CHECK(build_torus(m, n).euler_characteristic() == 0);
    }
  }
}

TEST_CASE("rectangle corners: interior only inside") {
  auto s = build_rectangle(3, 4);
  CHECK(s.orbits().size() == 20);
  CHECK(s.interior_orbits().size() == 6);
  for (const auto& o : s.interior_orbits()) CHECK(o.square_degree() == 4);
  CHECK(s.gluings().size() == 17);
}

TEST_CASE("torus of one square") {
  auto s = build_torus(1, 1);
  CHECK(s.orbits().size() == 1);
  CHECK(s.orbits()[0].interior);
  CHECK(s.orbits()[0].square_degree() == 1);
  CHECK(s.adjacency().edges.empty());
}

TEST_CASE("staircase closes to one vertex") {
  for (int steps = 1; steps <= 6; ++steps) {
    auto s = build_staircase(steps);
    CAPTURE(steps);
    CHECK(s.size() == 2 * steps - 1);
    REQUIRE(s.orbits().size() == 1);
    CHECK(s.orbits()[0].interior);
    CHECK(s.euler_characteristic() == 2 - 2 * steps);
    CHECK(static_cast<int>(s.orbits()[0].corners.size()) == 4 * s.size());
  }
}

TEST_CASE("adjacency drops loops and parallel edges") {
  auto s = build_mobius(3);
  // 2 is glued to itself top to bottom; 1 and 3 are joined both along the row and across the twist.
  CHECK(s.adjacency().edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(s.adjacency().adjacent(3, 1));
  CHECK_FALSE(s.adjacency().adjacent(2, 2));
  CHECK(s.adjacency().connected());
}

TEST_CASE("gluings are canonicalized") {
  SquareTiledSurface s(2, {{{2, Side::W}, {1, Side::E}, false}, {{2, Side::S}, {1, Side::N}, true}});
  REQUIRE(s.gluings().size() == 2);
  CHECK(s.gluings()[0].a == SideRef{1, Side::N});
  CHECK(s.gluings()[0].b == SideRef{2, Side::S});
  CHECK(s.gluings()[0].reversed);
  CHECK(s.gluings()[1].a == SideRef{1, Side::E});
  CHECK(s.is_glued({2, Side::W}));
  CHECK_FALSE(s.is_glued({2, Side::E}));
  CHECK(s.gluing_at({1, Side::E})->b == SideRef{2, Side::W});
}

TEST_CASE("invalid gluing relations are rejected") {
  CHECK_THROWS_AS(SquareTiledSurface(0, {}), SurfaceError);
  CHECK_THROWS_AS(SquareTiledSurface(1, {{{1, Side::N}, {1, Side::N}, false}}), SurfaceError);
  CHECK_THROWS_AS(SquareTiledSurface(1, {{{1, Side::N}, {2, Side::S}, false}}), SurfaceError);
  CHECK_THROWS_AS(SquareTiledSurface(2, {{{1, Side::E}, {2, Side::W}, false}, {{1, Side::E}, {2, Side::N}, false}}),
                  SurfaceError);
  CHECK_THROWS_AS(build_mobius(0), SurfaceError);
  CHECK_THROWS_AS(build_rectangle(2, 0), SurfaceError);
}

TEST_CASE("surface text round-trips") {
  for (const auto& s : {build_mobius(5), build_klein(6), build_projective(4), build_torus(2, 3), build_annulus(3),
                        build_staircase(3)}) {
    CAPTURE(s.name());
    auto text = serialize_surface(s);
    auto back = parse_surface(text);
    CHECK(back.size() == s.size());
    CHECK(back.gluings() == s.gluings());
    CHECK(back.name() == s.name());
    CHECK(serialize_surface(back) == text);
  }
}

TEST_CASE("parser reads comments, rev and names") {
  auto s = parse_surface("# twisted pair\nsquares 2\n\nglue 1.E 2.W   # seam\nglue 1.N 2.S rev\n");
  CHECK(s.name() == "twisted pair");
  CHECK(s.size() == 2);
  CHECK(s.gluings().size() == 2);
  CHECK(s.gluings()[0].reversed);
  CHECK(parse_surface("squares 1\n").name() == "custom");
}

TEST_CASE("parser errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_surface(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("squares 2\nglue 1.E 2.W\nglue 1.E 2.N\n") == 3);
  CHECK(line_of("squares 2\nglue 1.E 1.E\n") == 2);
  CHECK(line_of("squares 2\nglue 1.E 3.W\n") == 2);
  CHECK(line_of("squares 2\nglue 1.Q 2.W\n") == 2);
  CHECK(line_of("# x\nsquares 2\nbend 1.E 2.W\n") == 3);
  CHECK(line_of("glue 1.E 2.W\n") == 1);
  CHECK(line_of("squares 2\nglue 1.E 2.W flip\n") == 2);
  CHECK(line_of("") == 1);
}
