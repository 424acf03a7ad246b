#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "domino/flipgraph.hpp"
#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino {

enum class DiameterMethod { Bfs, Levels, ClosedForm };

std::string_view to_string(DiameterMethod m) noexcept;

struct DiameterReport {
  long long value = 0;
  DiameterMethod method = DiameterMethod::Bfs;
  std::optional<std::pair<Tiling, Tiling>> realizers;
};

/// Exact diameter from the explicit flip graph, with a realizing pair.
/// Throws ResourceLimit above `node_budget` tilings, Untileable for
/// untileable regions and UnsupportedRegion when the graph is disconnected.
DiameterReport diameter_bfs(const Region& r, std::size_t node_budget = kDefaultNodeBudget);

/// Sum of vertex levels: exact for Saturnian regions, an upper bound otherwise.
long long diameter_levels(const Region& r);

/// (n^3 - n) / 6 for the n x n square, n even.
long long diameter_square_closed(int n);

/// m x n rectangle with m >= n and m*n even. Evaluates the polynomial closed
/// form and the level-count sum and checks they agree.
long long diameter_rectangle_closed(int m, int n);

/// n^3/3 + n^2/2 + n/6 for the Aztec diamond of order n.
long long diameter_aztec_closed(int n);

}  // namespace domino
