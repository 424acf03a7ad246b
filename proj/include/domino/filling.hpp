#pragma once

#include <vector>

#include "domino/cycles.hpp"
#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino {

/// Stack of unit cubes over each region vertex: one layer above the region
/// for every positive cycle surrounding the vertex, one layer dug below it for
/// every negative one. Stored as the net signed column height.
struct FillingShape {
  std::vector<Vertex> vertices;  // same order as Region::vertices()
  std::vector<int> columns;      // parallel to vertices

  friend bool operator==(const FillingShape&, const FillingShape&) = default;
};

struct Volumes {
  long long plus = 0;   // >= 0
  long long minus = 0;  // <= 0

  long long distance() const noexcept { return plus - minus; }
  friend bool operator==(const Volumes&, const Volumes&) = default;
};

struct Voxel {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const Voxel&) const = default;
};

FillingShape filling_shape(const Region& r, const Tiling& t1, const Tiling& t2);
FillingShape filling_shape(const Region& r, const CycleCollection& cc);

Volumes volumes(const FillingShape& f);

/// Unit cubes sitting on (z >= 0) or hanging below (z < 0) each vertex,
/// ordered by vertex then z.
std::vector<Voxel> export_voxels(const FillingShape& f);

}  // namespace domino
