#include <doctest.h>

#include <algorithm>
#include <string>

#include "domino/diameter.hpp"
#include "domino/errors.hpp"
#include "domino/filling.hpp"
#include "domino/height.hpp"
#include "oracles.hpp"

using namespace domino;

namespace {

int oracle_diameter(const Region& r) {
  const auto d = oracle::distances(oracle::tilings({r.cells().begin(), r.cells().end()}));
  int best = 0;
  for (const auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

}  // namespace

TEST_CASE("BFS diameters of small regions") {
  const std::vector<std::pair<Region, long long>> cases{
      {make_rectangle(2, 2), 1}, {make_rectangle(3, 2), 2}, {make_rectangle(4, 2), 3},
      {make_rectangle(5, 2), 4}, {make_rectangle(6, 2), 5}, {make_rectangle(4, 3), 6},
      {make_rectangle(4, 4), 10}, {make_aztec(1), 1},       {make_aztec(2), 5},
      {make_aztec(3), 14},
  };
  for (const auto& [r, expected] : cases) {
    CAPTURE(r.size());
    const DiameterReport rep = diameter_bfs(r);
    CHECK(rep.value == expected);
    CHECK(rep.value == oracle_diameter(r));
    CHECK(rep.method == DiameterMethod::Bfs);
    REQUIRE(rep.realizers.has_value());
    CHECK(distance_height(r, rep.realizers->first, rep.realizers->second) == expected);
  }
}

TEST_CASE("realizers are the extremal tilings") {
  for (const Region& r : {make_rectangle(4, 3), make_rectangle(4, 4), make_aztec(2), make_aztec(3)}) {
    const DiameterReport rep = diameter_bfs(r);
    const auto [lo, hi] = extremal_tilings(r);
    const auto got = std::minmax(rep.realizers->first, rep.realizers->second);
    CHECK(got == std::minmax(lo, hi));

    // All cycles of the extremal pair share one orientation.
    const FillingShape f = filling_shape(r, lo, hi);
    CHECK((std::all_of(f.columns.begin(), f.columns.end(), [](int c) { return c >= 0; }) ||
           std::all_of(f.columns.begin(), f.columns.end(), [](int c) { return c <= 0; })));
    CHECK(volumes(f).distance() == rep.value);
  }
}

TEST_CASE("level sums") {
  CHECK(diameter_levels(make_rectangle(2, 2)) == 1);
  CHECK(diameter_levels(make_rectangle(6, 6)) == 35);
  CHECK(diameter_levels(make_aztec(4)) == 30);
  for (const Region& r : {make_rectangle(4, 4), make_rectangle(6, 2), make_aztec(1), make_aztec(2), make_aztec(3)}) {
    CHECK(diameter_levels(r) == diameter_bfs(r).value);
  }
  // Upper bound on simply connected regions that are not Saturnian.
  for (const Region& r : {make_rectangle(4, 3), make_rectangle(5, 4), make_rectangle(3, 2)}) {
    CHECK(diameter_bfs(r).value <= diameter_levels(r));
  }
}

TEST_CASE("closed forms") {
  CHECK(diameter_square_closed(2) == 1);
  CHECK(diameter_square_closed(4) == 10);
  CHECK(diameter_square_closed(6) == 35);
  CHECK(diameter_rectangle_closed(6, 2) == 5);
  CHECK(diameter_rectangle_closed(4, 3) == 6);
  CHECK(diameter_rectangle_closed(4, 4) == 10);
  CHECK(diameter_aztec_closed(1) == 1);
  CHECK(diameter_aztec_closed(2) == 5);
  CHECK(diameter_aztec_closed(4) == 30);

  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= m; ++n) {
      if ((m * n) % 2 != 0) continue;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(diameter_rectangle_closed(m, n) == diameter_levels(make_rectangle(m, n)));
      CHECK(diameter_rectangle_closed(m, n) == oracle::rectangle_level_sum(m, n));
    }
  }
  for (int n = 2; n <= 8; n += 2) CHECK(diameter_square_closed(n) == diameter_rectangle_closed(n, n));
  for (int n = 1; n <= 6; ++n) CHECK(diameter_aztec_closed(n) == diameter_levels(make_aztec(n)));
  // Strips of width two: one less than the length.
  for (int m = 2; m <= 30; ++m) CHECK(diameter_rectangle_closed(m, 2) == m - 1);
}

TEST_CASE("closed forms match BFS on rectangles with an odd side") {
  for (const auto& [m, n] : {std::pair{4, 3}, {6, 3}, {6, 5}, {4, 1}, {5, 4}}) {
    const int a = std::max(m, n), b = std::min(m, n);
    CHECK(diameter_rectangle_closed(a, b) == diameter_bfs(make_rectangle(m, n)).value);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(diameter_square_closed(3), InvalidArgument);
  CHECK_THROWS_AS(diameter_square_closed(0), InvalidArgument);
  CHECK_THROWS_AS(diameter_rectangle_closed(3, 4), InvalidArgument);
  CHECK_THROWS_AS(diameter_rectangle_closed(5, 3), InvalidArgument);
  CHECK_THROWS_AS(diameter_aztec_closed(0), InvalidArgument);
  CHECK_THROWS_AS(diameter_bfs(make_rectangle(3, 3)), Untileable);
  CHECK_THROWS_AS(diameter_bfs(make_holed_square(3)), UnsupportedRegion);
  CHECK_THROWS_AS(diameter_bfs(make_rectangle(6, 6), 1000), ResourceLimit);
  CHECK(std::string(to_string(DiameterMethod::ClosedForm)) == "closed-form");
}
