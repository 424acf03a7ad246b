#include "domino/filling.hpp"

#include "domino/errors.hpp"

namespace domino {

FillingShape filling_shape(const Region& r, const CycleCollection& cc) {
  const ValueMap nu = value_map(r, cc);
  FillingShape f;
  f.vertices = nu.vertices;
  f.columns.resize(nu.vertices.size());
  for (std::size_t i = 0; i < f.columns.size(); ++i) f.columns[i] = nu.plus[i] - nu.minus[i];
  return f;
}

FillingShape filling_shape(const Region& r, const Tiling& t1, const Tiling& t2) {
  if (!is_simply_connected(r)) {
    throw UnsupportedRegion("filling shapes need a simply connected region");
  }
  return filling_shape(r, cycle_collection(r, t1, t2));
}

Volumes volumes(const FillingShape& f) {
  Volumes v;
  for (int c : f.columns) {
    if (c > 0) v.plus += c;
    else v.minus += c;
  }
  return v;
}

std::vector<Voxel> export_voxels(const FillingShape& f) {
  std::vector<Voxel> out;
  for (std::size_t i = 0; i < f.columns.size(); ++i) {
    const Vertex v = f.vertices[i];
    const int k = f.columns[i];
    for (int z = k; z < 0; ++z) out.push_back({v.x, v.y, z});
    for (int z = 0; z < k; ++z) out.push_back({v.x, v.y, z});
  }
  return out;
}

}  // namespace domino
