#pragma once

// Partner-array view of a tiling, shared by the algorithms that mutate tilings
// in place (enumeration, flip graph search, geodesics, extremal tilings).

#include <cstdint>
#include <string>
#include <vector>

#include "domino/surface.hpp"
#include "domino/tiling.hpp"

namespace domino::detail {

/// partner[i] is the index of the cell sharing a domino with cell i.
using Partners = std::vector<std::int32_t>;

/// Throws InvalidArgument if the tiling is not a perfect matching of r.
Partners to_partners(const Region& r, const Tiling& t);
Tiling from_partners(const Region& r, const Partners& p);

enum class BlockState : std::uint8_t { None, Horizontal, Vertical };

/// The four cells around an interior vertex: lower-left, lower-right, upper-left, upper-right.
struct Block {
  std::int32_t ll, lr, ul, ur;
};

/// Valid only for interior vertices.
Block block_at(const Region& r, std::size_t vertex_idx);
BlockState block_state(const Partners& p, const Block& b);
/// Rotates a flippable block; returns the state it had before.
BlockState flip_block(Partners& p, const Block& b);

/// True when flipping a block in `state` around `anchor` raises the anchor height.
bool flip_raises(Vertex anchor, BlockState state);

/// Compact byte key of a tiling (one direction code per cell) for hashing.
std::string key_of(const Region& r, const Partners& p);

}  // namespace domino::detail
