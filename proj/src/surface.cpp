#include "domino/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

#include "domino/errors.hpp"
#include "domino/tiling.hpp"

namespace domino {

namespace {

constexpr long long kMaxBoundingBoxArea = 50'000'000;

constexpr std::array<std::pair<int, int>, 4> kDirections{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

}  // namespace

Region::Region(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) return;

  int max_x = std::numeric_limits<int>::min();
  int max_y = std::numeric_limits<int>::min();
  min_x_ = std::numeric_limits<int>::max();
  min_y_ = std::numeric_limits<int>::max();
  for (const Cell& c : cells_) {
    min_x_ = std::min(min_x_, c.x);
    min_y_ = std::min(min_y_, c.y);
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  const long long w = static_cast<long long>(max_x) - min_x_ + 1;
  const long long h = static_cast<long long>(max_y) - min_y_ + 1;
  if ((w + 1) * (h + 1) > kMaxBoundingBoxArea) {
    throw InvalidArgument("region bounding box too large: " + std::to_string(w) + "x" +
                          std::to_string(h));
  }
  width_ = static_cast<int>(w);
  height_ = static_cast<int>(h);

  cell_lookup_.assign(static_cast<std::size_t>(width_ * height_), kNoIndex);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    cell_lookup_[static_cast<std::size_t>((c.x - min_x_) * height_ + (c.y - min_y_))] =
        static_cast<std::int32_t>(i);
  }

  adjacency_.resize(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (std::size_t d = 0; d < 4; ++d) {
      const auto [dx, dy] = kDirections[d];
      adjacency_[i][d] = cell_index({cells_[i].x + dx, cells_[i].y + dy});
    }
  }

  // Vertices in lexicographic order: walk the (w+1) x (h+1) lattice column by column.
  vertex_lookup_.assign(static_cast<std::size_t>((width_ + 1) * (height_ + 1)), kNoIndex);
  for (int vx = min_x_; vx <= max_x + 1; ++vx) {
    for (int vy = min_y_; vy <= max_y + 1; ++vy) {
      int incident = 0;
      for (int dx = -1; dx <= 0; ++dx) {
        for (int dy = -1; dy <= 0; ++dy) {
          if (contains({vx + dx, vy + dy})) ++incident;
        }
      }
      if (incident == 0) continue;
      vertex_lookup_[static_cast<std::size_t>((vx - min_x_) * (height_ + 1) + (vy - min_y_))] =
          static_cast<std::int32_t>(vertices_.size());
      vertices_.push_back({vx, vy});
      interior_.push_back(incident == 4 ? 1 : 0);
    }
  }
}

std::int32_t Region::cell_index(Cell c) const noexcept {
  if (cells_.empty()) return kNoIndex;
  const int dx = c.x - min_x_;
  const int dy = c.y - min_y_;
  if (dx < 0 || dy < 0 || dx >= width_ || dy >= height_) return kNoIndex;
  return cell_lookup_[static_cast<std::size_t>(dx * height_ + dy)];
}

std::int32_t Region::vertex_index(Vertex v) const noexcept {
  if (cells_.empty()) return kNoIndex;
  const int dx = v.x - min_x_;
  const int dy = v.y - min_y_;
  if (dx < 0 || dy < 0 || dx > width_ || dy > height_) return kNoIndex;
  return vertex_lookup_[static_cast<std::size_t>(dx * (height_ + 1) + dy)];
}

bool Region::is_interior(Vertex v) const noexcept {
  const std::int32_t i = vertex_index(v);
  return i != kNoIndex && interior_[static_cast<std::size_t>(i)] != 0;
}

std::vector<Vertex> Region::boundary_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!interior_[i]) out.push_back(vertices_[i]);
  }
  return out;
}

std::vector<Vertex> Region::interior_vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (interior_[i]) out.push_back(vertices_[i]);
  }
  return out;
}

std::size_t Region::black_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](Cell c) { return color_of(c) == Color::Black; }));
}

Region make_rectangle(int m, int n) {
  if (m < 1 || n < 1) {
    throw InvalidArgument("rectangle dimensions must be positive, got " + std::to_string(m) +
                          "x" + std::to_string(n));
  }
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) cells.push_back({x, y});
  }
  return Region(std::move(cells));
}

Region make_aztec(int n) {
  if (n < 1) throw InvalidArgument("aztec diamond order must be >= 1, got " + std::to_string(n));
  std::vector<Cell> cells;
  for (int x = -n; x < n; ++x) {
    for (int y = -n; y < n; ++y) {
      if (std::abs(2 * x + 1) + std::abs(2 * y + 1) <= 2 * n) cells.push_back({x, y});
    }
  }
  return Region(std::move(cells));
}

Region make_holed_square(int k) {
  if (k < 3 || k % 2 == 0) {
    throw InvalidArgument("holed square side must be odd and >= 3, got " + std::to_string(k));
  }
  std::vector<Cell> cells;
  const int mid = k / 2;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x != mid || y != mid) cells.push_back({x, y});
    }
  }
  return Region(std::move(cells));
}

Region make_from_cells(std::span<const Cell> cells) {
  if (cells.empty()) throw InvalidArgument("region needs at least one cell");
  return Region(std::vector<Cell>(cells.begin(), cells.end()));
}

bool is_simply_connected(const Region& r) {
  if (r.empty()) return false;

  // Edge-connectivity of the cells.
  std::vector<std::uint8_t> seen(r.size(), 0);
  std::queue<std::int32_t> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto i = static_cast<std::size_t>(queue.front());
    queue.pop();
    for (std::int32_t j : r.neighbors(i)) {
      if (j != kNoIndex && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        ++reached;
        queue.push(j);
      }
    }
  }
  if (reached != r.size()) return false;

  // Complement connectivity inside the bounding box padded by one cell.
  int min_x = r.cells().front().x, max_x = r.cells().back().x;
  int min_y = r.cells().front().y, max_y = min_y;
  for (const Cell& c : r.cells()) {
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  min_x -= 1;
  min_y -= 1;
  max_x += 1;
  max_y += 1;
  const int w = max_x - min_x + 1;
  const int h = max_y - min_y + 1;
  auto id = [&](int x, int y) { return static_cast<std::size_t>((x - min_x) * h + (y - min_y)); };

  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w * h), 0);
  std::size_t complement_total = static_cast<std::size_t>(w * h) - r.size();
  std::size_t complement_reached = 0;
  std::queue<Cell> open;
  open.push({min_x, min_y});
  visited[id(min_x, min_y)] = 1;
  while (!open.empty()) {
    const Cell c = open.front();
    open.pop();
    ++complement_reached;
    for (const auto& [dx, dy] : kDirections) {
      const Cell n{c.x + dx, c.y + dy};
      if (n.x < min_x || n.x > max_x || n.y < min_y || n.y > max_y) continue;
      if (visited[id(n.x, n.y)] || r.contains(n)) continue;
      visited[id(n.x, n.y)] = 1;
      open.push(n);
    }
  }
  return complement_reached == complement_total;
}

int RingDecomposition::level(Vertex v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw InvalidArgument("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                          ") is not a vertex of the region");
  }
  return levels[static_cast<std::size_t>(it - vertices.begin())];
}

int RingDecomposition::max_level() const noexcept {
  return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
}

std::vector<std::vector<Vertex>> RingDecomposition::level_classes() const {
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(max_level()) + 1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    classes[static_cast<std::size_t>(levels[i])].push_back(vertices[i]);
  }
  return classes;
}

RingDecomposition ring_decomposition(const Region& r) {
  if (r.empty()) throw InvalidArgument("ring decomposition of an empty region");

  RingDecomposition out;
  out.vertices.assign(r.vertices().begin(), r.vertices().end());
  out.levels.assign(out.vertices.size(), -1);

  std::vector<std::uint8_t> alive(r.size(), 1);
  std::size_t remaining = r.size();

  auto interior_now = [&](Vertex v) {
    for (int dx = -1; dx <= 0; ++dx) {
      for (int dy = -1; dy <= 0; ++dy) {
        const std::int32_t c = r.cell_index({v.x + dx, v.y + dy});
        if (c == kNoIndex || !alive[static_cast<std::size_t>(c)]) return false;
      }
    }
    return true;
  };

  int step = 0;
  while (remaining > 0) {
    std::vector<std::uint8_t> on_boundary(out.vertices.size(), 0);
    for (std::size_t v = 0; v < out.vertices.size(); ++v) {
      if (interior_now(out.vertices[v])) continue;
      on_boundary[v] = 1;
      if (out.levels[v] < 0) out.levels[v] = step;
    }

    std::vector<Cell> ring;
    std::vector<std::size_t> ring_idx;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (!alive[c]) continue;
      const Cell cell = r.cells()[c];
      bool touches = false;
      for (int dx = 0; dx <= 1 && !touches; ++dx) {
        for (int dy = 0; dy <= 1 && !touches; ++dy) {
          const auto vi = static_cast<std::size_t>(r.vertex_index({cell.x + dx, cell.y + dy}));
          touches = on_boundary[vi] != 0;
        }
      }
      if (touches) {
        ring.push_back(cell);
        ring_idx.push_back(c);
      }
    }
    for (std::size_t c : ring_idx) alive[c] = 0;
    remaining -= ring_idx.size();
    out.rings.push_back(std::move(ring));
    ++step;
  }
  for (int& lev : out.levels) {
    if (lev < 0) lev = step;
  }
  return out;
}

namespace {

// Depth-first search for a cycle through every cell of `ring` using dual edges.
class HamiltonianCycleSearch {
 public:
  explicit HamiltonianCycleSearch(const std::vector<Cell>& ring) : ring_(ring) {
    const Region local(ring);
    adj_.resize(local.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
      for (std::int32_t j : local.neighbors(i)) {
        if (j != kNoIndex) adj_[i].push_back(static_cast<std::size_t>(j));
      }
    }
  }

  bool run() {
    const std::size_t n = adj_.size();
    if (n < 4) return false;
    for (const auto& a : adj_) {
      if (a.size() < 2) return false;
    }
    const auto blacks = std::count_if(ring_.begin(), ring_.end(),
                                      [](Cell c) { return color_of(c) == Color::Black; });
    if (static_cast<std::size_t>(blacks) * 2 != n) return false;

    on_path_.assign(n, 0);
    on_path_[0] = 1;
    return extend(0, 1);
  }

 private:
  static constexpr std::size_t kStepBudget = 20'000'000;

  bool extend(std::size_t at, std::size_t length) {
    if (++steps_ > kStepBudget) throw ResourceLimit("ring cycle search exceeded its step budget");
    const std::size_t n = adj_.size();
    if (length == n) {
      return std::find(adj_[at].begin(), adj_[at].end(), 0) != adj_[at].end();
    }
    for (std::size_t next : adj_[at]) {
      if (on_path_[next]) continue;
      on_path_[next] = 1;
      if (feasible(next) && extend(next, length + 1)) return true;
      on_path_[next] = 0;
    }
    return false;
  }

  // Every cell still off the path needs two usable neighbours.
  bool feasible(std::size_t end) const {
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (on_path_[v]) continue;
      int usable = 0;
      for (std::size_t w : adj_[v]) {
        if (!on_path_[w] || w == end || w == 0) ++usable;
      }
      if (usable < 2) return false;
    }
    return true;
  }

  const std::vector<Cell>& ring_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::uint8_t> on_path_;
  std::size_t steps_ = 0;
};

}  // namespace

bool is_saturnian(const Region& r) {
  if (r.empty()) return false;
  const RingDecomposition rings = ring_decomposition(r);
  std::vector<Cell> rest(r.cells().begin(), r.cells().end());
  for (const auto& ring : rings.rings) {
    if (!HamiltonianCycleSearch(ring).run()) return false;
    std::vector<Cell> next;
    std::set_difference(rest.begin(), rest.end(), ring.begin(), ring.end(),
                        std::back_inserter(next));
    rest = std::move(next);
    if (!rest.empty() && !find_tiling(Region(rest))) return false;
  }
  return true;
}

}  // namespace domino
