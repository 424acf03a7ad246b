#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino {

inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

/// Explicit flip graph: nodes in canonical enumeration order, sorted
/// neighbour lists, one edge per single flip.
struct FlipGraph {
  std::vector<Tiling> nodes;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t edge_count() const noexcept;
};

/// Throws ResourceLimit when the region has more than `node_budget` tilings.
FlipGraph build_flip_graph(const Region& r, std::size_t node_budget = kDefaultNodeBudget);

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Hop counts from `source`; kUnreachable outside its component.
std::vector<std::size_t> bfs_from(const FlipGraph& g, std::size_t source);

/// nullopt when the nodes lie in different components.
std::optional<std::size_t> bfs_distance(const FlipGraph& g, std::size_t i, std::size_t j);

/// Components ordered by smallest member; members ascending.
std::vector<std::vector<std::size_t>> connected_components(const FlipGraph& g);

struct GraphDiameter {
  std::size_t value = 0;
  std::size_t from = 0;
  std::size_t to = 0;
};

/// Exact diameter of a connected flip graph by eccentricity bounding: BFS
/// sweeps discard nodes whose eccentricity upper bound cannot beat the best
/// lower bound. Throws UnsupportedRegion for disconnected graphs and
/// InvalidArgument for empty ones.
GraphDiameter graph_diameter(const FlipGraph& g);

/// Breadth-first search over tilings reachable from t1, without enumerating
/// the region. nullopt when t2 is not reachable.
std::optional<std::size_t> flip_distance_search(const Region& r, const Tiling& t1, const Tiling& t2,
                                                std::size_t node_budget = kDefaultNodeBudget);

enum class GraphFormat { Dot, Json };

/// DOT (undirected, 0-based node labels) or JSON {"nodes": [...], "edges": [[i, j], ...]}.
/// Output always ends with a newline.
std::string export_graph(const FlipGraph& g, GraphFormat format);

}  // namespace domino
