#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "domino/surface.hpp"

namespace domino {

using BigInt = boost::multiprecision::cpp_int;

/// Two side-adjacent cells, stored with the lexicographically smaller one first.
struct Domino {
  Cell a;
  Cell b;

  bool horizontal() const noexcept { return a.y == b.y; }
  auto operator<=>(const Domino&) const = default;
};

/// Builds a canonical domino; throws InvalidArgument when the cells are not adjacent.
Domino make_domino(Cell p, Cell q);

/// A set of dominoes, kept sorted so equal tilings compare equal.
class Tiling {
 public:
  Tiling() = default;
  explicit Tiling(std::vector<Domino> dominoes);

  std::span<const Domino> dominoes() const noexcept { return dominoes_; }
  std::size_t size() const noexcept { return dominoes_.size(); }
  bool contains(const Domino& d) const noexcept;

  auto operator<=>(const Tiling&) const = default;

 private:
  std::vector<Domino> dominoes_;
};

/// A flip re-tiles the 2x2 block whose centre is `anchor`.
struct FlipMove {
  Vertex anchor;

  auto operator<=>(const FlipMove&) const = default;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

bool is_valid_tiling(const Region& r, const Tiling& t);

/// All tilings in canonical order: backtracking on the lexicographically
/// smallest uncovered cell, horizontal partner first. Throws ResourceLimit
/// once more than `limit` tilings have been produced.
std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit = kNoLimit);

/// Exact tiling count (broken-profile transfer matrix).
BigInt count_tilings(const Region& r);

/// Kasteleyn / Temperley-Fisher product evaluated in floating point and rounded.
BigInt count_rectangle_closed_form(int m, int n);

/// 2^(n(n+1)/2).
BigInt count_aztec_closed_form(int n);

/// Any tiling of the region (bipartite matching), or nullopt when untileable.
std::optional<Tiling> find_tiling(const Region& r);

/// Anchors whose 2x2 block is covered by two parallel dominoes, sorted.
std::vector<FlipMove> available_flips(const Region& r, const Tiling& t);

/// Rotates the block at f.anchor; throws InvalidMove when it is not flippable.
Tiling apply_flip(const Region& r, const Tiling& t, FlipMove f);

}  // namespace domino
