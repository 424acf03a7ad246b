#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace domino {

/// Unit square [x, x+1] x [y, y+1] of the integer grid.
struct Cell {
  int x = 0;
  int y = 0;

  auto operator<=>(const Cell&) const = default;
};

/// Lattice point, a corner of some cell.
struct Vertex {
  int x = 0;
  int y = 0;

  auto operator<=>(const Vertex&) const = default;
};

enum class Color : std::uint8_t { Black, White };

/// Chessboard coloring of the plane: (x + y) even is black.
constexpr Color color_of(Cell c) noexcept {
  return ((c.x + c.y) % 2 == 0) ? Color::Black : Color::White;
}

inline constexpr std::int32_t kNoIndex = -1;

/// A finite set of grid cells with its derived lattice vertices and dual graph.
///
/// Cells and vertices are kept sorted lexicographically (x, then y); indices
/// returned by the lookup functions refer to those sorted orders. A Region is
/// immutable once constructed.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Cell> cells);

  std::span<const Cell> cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  bool contains(Cell c) const noexcept { return cell_index(c) != kNoIndex; }
  std::int32_t cell_index(Cell c) const noexcept;

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::int32_t vertex_index(Vertex v) const noexcept;

  /// Interior iff all four cells around the vertex belong to the region.
  bool is_interior(Vertex v) const noexcept;
  bool is_interior(std::size_t vertex_idx) const noexcept { return interior_[vertex_idx] != 0; }
  std::vector<Vertex> boundary_vertices() const;
  std::vector<Vertex> interior_vertices() const;

  /// Dual-graph neighbours of a cell in the order right, up, left, down
  /// (kNoIndex where absent).
  const std::array<std::int32_t, 4>& neighbors(std::size_t cell_idx) const noexcept {
    return adjacency_[cell_idx];
  }

  std::size_t black_count() const noexcept;

  friend bool operator==(const Region& a, const Region& b) noexcept { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint8_t> interior_;
  std::vector<std::array<std::int32_t, 4>> adjacency_;

  // Dense lookup tables over the bounding box.
  int min_x_ = 0;
  int min_y_ = 0;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int32_t> cell_lookup_;
  std::vector<std::int32_t> vertex_lookup_;
};

Region make_rectangle(int m, int n);
/// Aztec diamond of order n: cells with |x + 1/2| + |y + 1/2| <= n.
Region make_aztec(int n);
/// k x k square (k odd, k >= 3) with its central cell removed.
Region make_holed_square(int k);
Region make_from_cells(std::span<const Cell> cells);

/// Edge-connected cell set whose complement in the plane is connected.
bool is_simply_connected(const Region& r);

/// Boundary peeling of a region.
///
/// rings[i] holds the cells of S^i that touch the boundary of S^i, where
/// S^0 is the region and S^{i+1} = S^i minus rings[i]. A vertex has level k
/// when it is interior to S^0, ..., S^{k-1} but not to S^k.
struct RingDecomposition {
  std::vector<std::vector<Cell>> rings;
  std::vector<Vertex> vertices;  // same order as Region::vertices()
  std::vector<int> levels;       // parallel to vertices

  int level(Vertex v) const;
  int max_level() const noexcept;
  /// level_classes()[i] = vertices of level i.
  std::vector<std::vector<Vertex>> level_classes() const;
};

RingDecomposition ring_decomposition(const Region& r);

/// Every ring is traversed by a single dual cycle of length >= 4 and the
/// region left after removing the first i rings is tileable or empty.
bool is_saturnian(const Region& r);

}  // namespace domino
