#pragma once

#include <cstddef>
#include <vector>

#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino {

/// Closed alternating path through cell centres.
///
/// Consecutive cells alternate between a domino of the first tiling and a
/// domino of the second; the traversal runs along first-tiling dominoes from
/// black to white. `orientation` is +1 when that traversal is counter-clockwise.
struct OrientedCycle {
  std::vector<Cell> cells;
  int orientation = 1;

  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;
};

struct CycleCollection {
  std::vector<OrientedCycle> cycles;

  friend bool operator==(const CycleCollection&, const CycleCollection&) = default;
};

/// Per-vertex counts of positive and negative cycles surrounding each vertex.
struct ValueMap {
  std::vector<Vertex> vertices;  // same order as Region::vertices()
  std::vector<int> plus;
  std::vector<int> minus;

  int nu(std::size_t i) const noexcept { return plus[i] > minus[i] ? plus[i] - minus[i] : minus[i] - plus[i]; }
  long long total() const noexcept;
};

/// Superimposes the tilings and splits the non-shared dominoes into cycles.
/// Cycles start at their lexicographically smallest cell, in order of that cell.
CycleCollection cycle_collection(const Region& r, const Tiling& t1, const Tiling& t2);

/// Signed area (doubled) of the polygon through the cell centres.
long long doubled_signed_area(const std::vector<Cell>& cycle);

/// Winding number of the centre polygon around a lattice vertex.
int winding_number(const std::vector<Cell>& cycle, Vertex v);

ValueMap value_map(const Region& r, const CycleCollection& cc);

/// Sum of |nu+ - nu-| over all vertices.
long long distance_cycles(const Region& r, const Tiling& t1, const Tiling& t2);

}  // namespace domino
