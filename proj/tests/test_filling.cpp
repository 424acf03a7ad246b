#include <doctest.h>

#include <cstdlib>

#include "domino/filling.hpp"
#include "domino/height.hpp"
#include "support.hpp"

using namespace domino;

TEST_CASE("seven by four filling shape") {
  const Region r = make_rectangle(7, 4);
  const Tiling a = fixture::tiling("rect7x4_pair_a.json");
  const Tiling b = fixture::tiling("rect7x4_pair_b.json");
  const FillingShape f = filling_shape(r, a, b);
  CHECK(volumes(f) == Volumes{16, 0});
  CHECK(volumes(f).distance() == 16);
  const auto voxels = export_voxels(f);
  CHECK(voxels.size() == 16);
  for (const Voxel& v : voxels) CHECK(v.z >= 0);
  CHECK(filling_shape(r, cycle_collection(r, a, b)) == f);
}

TEST_CASE("swapping the tilings mirrors the shape") {
  const Region r = make_aztec(3);
  const auto all = enumerate_tilings(r);
  for (std::size_t i = 0; i < all.size(); i += 5) {
    for (std::size_t j = 0; j < all.size(); j += 3) {
      const FillingShape f = filling_shape(r, all[i], all[j]);
      const FillingShape g = filling_shape(r, all[j], all[i]);
      for (std::size_t k = 0; k < f.columns.size(); ++k) CHECK(f.columns[k] == -g.columns[k]);
      const Volumes vf = volumes(f), vg = volumes(g);
      CHECK(vf.plus == -vg.minus);
      CHECK(vf.distance() == vg.distance());
      CHECK(vf.distance() == distance_height(r, all[i], all[j]));
      CHECK(export_voxels(f).size() == static_cast<std::size_t>(vf.distance()));
    }
  }
}

TEST_CASE("mixed signs") {
  // One raised and one sunken column side by side.
  FillingShape f;
  f.vertices = {{0, 0}, {1, 0}, {2, 0}};
  f.columns = {2, 0, -1};
  CHECK(volumes(f) == Volumes{2, -1});
  CHECK(volumes(f).distance() == 3);
  CHECK(export_voxels(f) == std::vector<Voxel>{{0, 0, 0}, {0, 0, 1}, {2, 0, -1}});
}

TEST_CASE("empty shape") {
  const Region r = make_rectangle(2, 2);
  const Tiling t = fixture::tiling("rect2x2_vertical.json");
  const FillingShape f = filling_shape(r, t, t);
  CHECK(volumes(f) == Volumes{0, 0});
  CHECK(export_voxels(f).empty());
}

TEST_CASE("columns never exceed the vertex level") {
  for (const Region& r : {make_rectangle(4, 4), make_aztec(3), make_rectangle(5, 4)}) {
    const RingDecomposition rd = ring_decomposition(r);
    const auto all = enumerate_tilings(r);
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 2) {
        const FillingShape f = filling_shape(r, all[i], all[j]);
        for (std::size_t k = 0; k < f.columns.size(); ++k) {
          CHECK(std::abs(f.columns[k]) <= rd.levels[k]);
        }
      }
    }
  }
}
