#pragma once

#include <utility>
#include <vector>

#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino {

/// Thurston height of every region vertex, normalised to 0 at `base`.
///
/// Unit edges are oriented with the black cell on their right. Walking a
/// positively oriented edge raises the height by 1 when no domino straddles
/// it and lowers it by 3 when it runs through the middle of a domino.
struct HeightFunction {
  Vertex base;
  std::vector<Vertex> vertices;  // same order as Region::vertices()
  std::vector<int> values;       // parallel to vertices

  int at(Vertex v) const;
  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

/// Lexicographically smallest boundary vertex; heights are measured from it.
Vertex base_vertex(const Region& r);

/// Throws UnsupportedRegion for regions that are not simply connected.
HeightFunction height_function(const Region& r, const Tiling& t);

/// d = (1/4) * sum over vertices of |h1 - h2|.
long long distance_height(const Region& r, const Tiling& t1, const Tiling& t2);

/// Inverse of height_function; throws InvalidHeight for labellings that break the edge rules.
Tiling tiling_from_height(const Region& r, const HeightFunction& h);

/// Tiling of the pointwise maximum of the two height functions.
Tiling join(const Region& r, const Tiling& t1, const Tiling& t2);
/// Tiling of the pointwise minimum of the two height functions.
Tiling meet(const Region& r, const Tiling& t1, const Tiling& t2);

/// (minimal, maximal) tilings of the height lattice; throws Untileable.
std::pair<Tiling, Tiling> extremal_tilings(const Region& r);

/// Flip sequence from t1 to t2 of length distance_height(t1, t2): heights only
/// rise until join(t1, t2) is reached, then only fall. Each step takes the
/// smallest eligible anchor.
std::vector<FlipMove> geodesic(const Region& r, const Tiling& t1, const Tiling& t2);

}  // namespace domino
