#include <doctest.h>

#include <algorithm>

#include "domino/errors.hpp"
#include "domino/flipgraph.hpp"
#include "domino/height.hpp"
#include "domino/io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace domino;

TEST_CASE("tiny graphs") {
  const FlipGraph g = build_flip_graph(make_rectangle(2, 2));
  CHECK(g.size() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(bfs_distance(g, 0, 1) == 1u);
  CHECK(bfs_distance(g, 1, 1) == 0u);
  CHECK(export_graph(g, GraphFormat::Dot) == "graph flips {\n  0;\n  1;\n  0 -- 1;\n}\n");

  const FlipGraph path = build_flip_graph(make_rectangle(3, 2));
  CHECK(path.size() == 3);
  CHECK(path.edge_count() == 2);
  const auto j = io::json::parse(export_graph(path, GraphFormat::Json));
  CHECK(j["nodes"].size() == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["nodes"][0]["id"] == 0);

  const FlipGraph none = build_flip_graph(make_rectangle(3, 3));
  CHECK(none.size() == 0);
  CHECK(export_graph(none, GraphFormat::Dot) == "graph flips {\n}\n");
  CHECK(connected_components(none).empty());
  CHECK_THROWS_AS(graph_diameter(none), InvalidArgument);
}

TEST_CASE("adjacency matches pairwise comparison") {
  for (const Region& r : {make_rectangle(4, 3), make_rectangle(4, 4), make_aztec(2), make_aztec(3),
                          make_holed_square(5)}) {
    const FlipGraph g = build_flip_graph(r);
    CHECK(g.nodes == enumerate_tilings(r));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g.adjacency[i].size() == available_flips(r, g.nodes[i]).size());
      CHECK(std::is_sorted(g.adjacency[i].begin(), g.adjacency[i].end()));
      for (std::size_t k = 0; k < g.size(); ++k) {
        const bool edge = std::binary_search(g.adjacency[i].begin(), g.adjacency[i].end(), k);
        CHECK(edge == oracle::flip_adjacent(g.nodes[i], g.nodes[k]));
      }
    }
  }
}

TEST_CASE("BFS matches the oracle and is a metric") {
  const Region r = make_rectangle(4, 3);
  const FlipGraph g = build_flip_graph(r);
  REQUIRE(g.size() == 11);
  const auto d = oracle::distances(g.nodes);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto row = bfs_from(g, i);
    for (std::size_t j = 0; j < g.size(); ++j) {
      CHECK(row[j] == static_cast<std::size_t>(d[i][j]));
      CHECK(bfs_distance(g, i, j) == bfs_distance(g, j, i));
      CHECK(flip_distance_search(r, g.nodes[i], g.nodes[j]) == row[j]);
      for (std::size_t k = 0; k < g.size(); ++k) CHECK(row[j] <= row[k] + bfs_from(g, k)[j]);
    }
  }
  CHECK_THROWS_AS(bfs_distance(g, 0, 11), InvalidArgument);
  CHECK_THROWS_AS(bfs_from(g, 99), InvalidArgument);
}

TEST_CASE("components") {
  CHECK(connected_components(build_flip_graph(make_rectangle(4, 3))).size() == 1);
  CHECK(connected_components(build_flip_graph(make_aztec(3))).size() == 1);

  const FlipGraph h3 = build_flip_graph(make_holed_square(3));
  const auto c3 = connected_components(h3);
  CHECK(c3 == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK_FALSE(bfs_distance(h3, 0, 1).has_value());
  CHECK_FALSE(flip_distance_search(make_holed_square(3), h3.nodes[0], h3.nodes[1]).has_value());
  CHECK_THROWS_AS(graph_diameter(h3), UnsupportedRegion);

  CHECK(connected_components(build_flip_graph(make_holed_square(5))).size() == 3);
}

TEST_CASE("exact diameter by eccentricity bounds") {
  for (const Region& r : {make_rectangle(4, 3), make_rectangle(4, 4), make_aztec(2), make_aztec(3),
                          make_rectangle(5, 4)}) {
    const FlipGraph g = build_flip_graph(r);
    const auto d = oracle::distances(g.nodes);
    int best = 0;
    for (const auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
    const GraphDiameter gd = graph_diameter(g);
    CHECK(gd.value == static_cast<std::size_t>(best));
    CHECK(d[gd.from][gd.to] == best);
  }
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(build_flip_graph(make_rectangle(6, 6), 100), ResourceLimit);
  const Region r = make_rectangle(8, 8);
  const Tiling t = *find_tiling(r);
  CHECK(flip_distance_search(r, t, t, 10) == 0u);
  const auto [lo, hi] = extremal_tilings(r);
  CHECK_THROWS_AS(flip_distance_search(r, lo, hi, 10), ResourceLimit);
}
