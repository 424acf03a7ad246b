#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "domino/errors.hpp"
#include "domino/tiling.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace domino;

TEST_CASE("enumeration agrees with the row-wise oracle") {
  const std::vector<std::pair<std::string, Region>> regions{
      {"rect 4x3", make_rectangle(4, 3)},   {"rect 4x4", make_rectangle(4, 4)},
      {"rect 3x3", make_rectangle(3, 3)},   {"aztec 2", make_aztec(2)},
      {"aztec 3", make_aztec(3)},           {"holed 3", make_holed_square(3)},
      {"staircase", fixture::region("staircase16_region.json")},
  };
  for (const auto& [name, r] : regions) {
    CAPTURE(name);
    const std::vector<Cell> cells(r.cells().begin(), r.cells().end());
    const auto mine = enumerate_tilings(r);
    auto sorted = mine;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == oracle::tilings(cells));
    CHECK(count_tilings(r) == mine.size());
    for (const Tiling& t : mine) CHECK(is_valid_tiling(r, t));
  }
}

TEST_CASE("known counts") {
  CHECK(count_tilings(make_rectangle(4, 3)) == 11);
  CHECK(count_tilings(make_rectangle(4, 4)) == 36);
  CHECK(count_tilings(make_rectangle(6, 6)) == 6728);
  CHECK(count_tilings(make_rectangle(8, 8)) == 12988816);
  CHECK(count_tilings(make_holed_square(3)) == 2);
  CHECK(count_tilings(make_rectangle(3, 3)) == 0);
  CHECK(count_tilings(make_rectangle(1, 1)) == 0);
  CHECK(count_tilings(Region{}) == 1);
  CHECK(count_tilings(fixture::region("staircase16_region.json")) == enumerate_tilings(fixture::region("staircase16_region.json")).size());
}

TEST_CASE("strips follow Fibonacci") {
  for (int n = 1; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(count_tilings(make_rectangle(n, 2)) == oracle::fibonacci(n + 1));
    CHECK(count_tilings(make_rectangle(2, n)) == oracle::fibonacci(n + 1));
  }
}

TEST_CASE("product formula for rectangles") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(count_rectangle_closed_form(m, n) == count_tilings(make_rectangle(m, n)));
    }
  }
  CHECK(count_rectangle_closed_form(10, 10) == count_tilings(make_rectangle(10, 10)));
  CHECK_THROWS_AS(count_rectangle_closed_form(20, 20), NumericInstability);
  CHECK_THROWS_AS(count_rectangle_closed_form(0, 2), InvalidArgument);
}

TEST_CASE("aztec counts") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const BigInt expected = BigInt(1) << (n * (n + 1) / 2);
    CHECK(count_aztec_closed_form(n) == expected);
    CHECK(count_tilings(make_aztec(n)) == expected);
  }
  CHECK(enumerate_tilings(make_aztec(4)).size() == 1024);
}

TEST_CASE("large counts stay exact") {
  // F(101) overflows every machine integer.
  BigInt a = 0, b = 1;
  for (int i = 0; i < 101; ++i) {
    const BigInt c = a + b;
    a = b;
    b = c;
  }
  CHECK(a > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(count_tilings(make_rectangle(100, 2)) == a);
  CHECK(count_tilings(make_aztec(9)) == (BigInt(1) << 45));
  CHECK_THROWS_AS(count_tilings(make_rectangle(31, 32)), ResourceLimit);
  // Odd area is settled before any sweep.
  CHECK(count_tilings(make_rectangle(31, 31)) == 0);
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_tilings(make_rectangle(6, 6), 100), ResourceLimit);
  CHECK(enumerate_tilings(make_rectangle(4, 4), 36).size() == 36);
}

TEST_CASE("find_tiling") {
  for (const Region& r : {make_rectangle(7, 4), make_aztec(5), make_rectangle(30, 31)}) {
    const auto t = find_tiling(r);
    REQUIRE(t.has_value());
    CHECK(is_valid_tiling(r, *t));
  }
  CHECK_FALSE(find_tiling(make_rectangle(3, 3)).has_value());
  const std::vector<Cell> zigzag{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {3, 2}};
  CHECK(find_tiling(make_from_cells(zigzag)).has_value());
  // Balanced colours but no tiling.
  const std::vector<Cell> blocked{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}};
  CHECK(count_tilings(make_from_cells(blocked)) == 0);
  CHECK_FALSE(find_tiling(make_from_cells(blocked)).has_value());
}

TEST_CASE("dominoes and validity") {
  CHECK(make_domino({1, 0}, {0, 0}) == Domino{{0, 0}, {1, 0}});
  CHECK(make_domino({0, 1}, {0, 0}).horizontal() == false);
  CHECK_THROWS_AS(make_domino({0, 0}, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(make_domino({0, 0}, {0, 0}), InvalidArgument);

  const Region r = make_rectangle(2, 2);
  CHECK(is_valid_tiling(r, fixture::tiling("rect2x2_vertical.json")));
  CHECK_FALSE(is_valid_tiling(r, fixture::tiling("rect2x2_broken.json")));
  CHECK_FALSE(is_valid_tiling(r, Tiling({make_domino({0, 0}, {1, 0})})));
  CHECK_FALSE(is_valid_tiling(make_rectangle(6, 2), fixture::tiling("rect2x2_vertical.json")));
}

TEST_CASE("flips") {
  const Region strip = make_rectangle(6, 2);
  const Tiling bricks = fixture::tiling("rect6x2_brick.json");
  const auto flips = available_flips(strip, bricks);
  CHECK(flips == std::vector<FlipMove>{{{1, 1}}, {{3, 1}}, {{5, 1}}});

  const Region sq = make_rectangle(2, 2);
  const Tiling v = fixture::tiling("rect2x2_vertical.json");
  const Tiling h = fixture::tiling("rect2x2_horizontal.json");
  CHECK(apply_flip(sq, v, {{1, 1}}) == h);
  CHECK(apply_flip(sq, h, {{1, 1}}) == v);
  CHECK_THROWS_AS(apply_flip(strip, bricks, {{2, 1}}), InvalidMove);
  CHECK_THROWS_AS(apply_flip(strip, bricks, {{0, 1}}), InvalidMove);

  // Every flip is an involution and lands on a neighbour in the oracle's sense.
  const Region r = make_rectangle(4, 4);
  for (const Tiling& t : enumerate_tilings(r)) {
    for (const FlipMove& f : available_flips(r, t)) {
      const Tiling u = apply_flip(r, t, f);
      CHECK(oracle::flip_adjacent(t, u));
      CHECK(apply_flip(r, u, f) == t);
    }
  }
}

TEST_CASE("mutilated chessboard") {
  std::vector<Cell> cells = oracle::rect_cells(8, 8);
  cells.erase(std::find(cells.begin(), cells.end(), Cell{0, 0}));
  cells.erase(std::find(cells.begin(), cells.end(), Cell{7, 7}));
  const Region r = make_from_cells(cells);
  CHECK(count_tilings(r) == 0);
  CHECK(enumerate_tilings(r).empty());
  CHECK_FALSE(find_tiling(r).has_value());
}

TEST_CASE("flips on vertical strips") {
  std::vector<Domino> ds;
  for (int x = 0; x < 6; ++x) ds.push_back(make_domino({x, 0}, {x, 1}));
  const Region strip = make_rectangle(6, 2);
  const Tiling vertical(ds);
  CHECK(available_flips(strip, vertical).size() == 5);

  ds.resize(4);
  const Region r = make_rectangle(4, 2);
  const Tiling t = apply_flip(r, Tiling(ds), {{1, 1}});
  CHECK(t.contains(make_domino({0, 0}, {1, 0})));
  CHECK(t.contains(make_domino({0, 1}, {1, 1})));
  CHECK(oracle::flip_adjacent(Tiling(ds), t));
}
