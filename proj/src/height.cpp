#include "domino/height.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

#include "domino/detail/matching.hpp"
#include "domino/errors.hpp"

namespace domino {

namespace {

// One unit edge seen from the vertex `from`.
struct EdgeView {
  std::int32_t to = kNoIndex;
  int sign = 0;  // +1 when from -> to is the positive direction
  std::int32_t cell_a = kNoIndex;
  std::int32_t cell_b = kNoIndex;
};

bool odd(int v) { return (v % 2 + 2) % 2 == 1; }

// The four unit edges at a vertex: right, up, left, down.
std::array<EdgeView, 4> edges_at(const Region& r, Vertex v) {
  std::array<EdgeView, 4> out{};
  const bool parity_odd = odd(v.x + v.y);
  auto make = [&](Vertex w, int sign, Cell a, Cell b) {
    EdgeView e;
    e.cell_a = r.cell_index(a);
    e.cell_b = r.cell_index(b);
    if (e.cell_a == kNoIndex && e.cell_b == kNoIndex) return e;
    e.to = r.vertex_index(w);
    e.sign = sign;
    return e;
  };
  // Horizontal edge (x,y)-(x+1,y) points in +x iff x + y is odd;
  // vertical edge (x,y)-(x,y+1) points in +y iff x + y is even.
  out[0] = make({v.x + 1, v.y}, parity_odd ? 1 : -1, {v.x, v.y - 1}, {v.x, v.y});
  out[1] = make({v.x, v.y + 1}, parity_odd ? -1 : 1, {v.x - 1, v.y}, {v.x, v.y});
  // Left / down edges belong to the neighbour at x-1 / y-1, whose parity is flipped.
  out[2] = make({v.x - 1, v.y}, parity_odd ? 1 : -1, {v.x - 1, v.y - 1}, {v.x - 1, v.y});
  out[3] = make({v.x, v.y - 1}, parity_odd ? -1 : 1, {v.x - 1, v.y - 1}, {v.x, v.y - 1});
  return out;
}

bool crossed(const detail::Partners& p, const EdgeView& e) {
  return e.cell_a != kNoIndex && e.cell_b != kNoIndex &&
         p[static_cast<std::size_t>(e.cell_a)] == e.cell_b;
}

std::vector<int> heights_of(const Region& r, const detail::Partners& p) {
  const std::size_t nv = r.vertices().size();
  const auto base = static_cast<std::size_t>(r.vertex_index(base_vertex(r)));
  std::vector<int> h(nv, 0);
  std::vector<std::uint8_t> seen(nv, 0);
  std::queue<std::size_t> queue;
  queue.push(base);
  seen[base] = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (const EdgeView& e : edges_at(r, r.vertices()[u])) {
      if (e.to == kNoIndex || crossed(p, e)) continue;
      const auto w = static_cast<std::size_t>(e.to);
      if (seen[w]) continue;
      seen[w] = 1;
      h[w] = h[u] + e.sign;
      queue.push(w);
    }
  }
  for (std::size_t u = 0; u < nv; ++u) {
    if (!seen[u]) throw std::logic_error("height propagation did not reach every vertex");
    for (const EdgeView& e : edges_at(r, r.vertices()[u])) {
      if (e.to == kNoIndex) continue;
      const int step = crossed(p, e) ? -3 : 1;
      if (h[static_cast<std::size_t>(e.to)] - h[u] != e.sign * step) {
        throw std::logic_error("height function is not path independent");
      }
    }
  }
  return h;
}

void require_simply_connected(const Region& r) {
  if (!is_simply_connected(r)) {
    throw UnsupportedRegion("height functions need a simply connected region");
  }
}

HeightFunction wrap(const Region& r, std::vector<int> values) {
  return HeightFunction{base_vertex(r), {r.vertices().begin(), r.vertices().end()},
                        std::move(values)};
}

// Greedy monotone flips towards `target` heights; appends each move to `path`.
// Moves up when `rising`, down otherwise, until the heights match.
void walk_towards(const Region& r, detail::Partners& p, std::vector<int>& h,
                  const std::vector<int>& target, bool rising, std::vector<FlipMove>* path) {
  long long gap = 0;
  for (std::size_t v = 0; v < h.size(); ++v) gap += std::abs(h[v] - target[v]);
  while (gap > 0) {
    bool moved = false;
    for (std::size_t v = 0; v < h.size() && !moved; ++v) {
      if (!r.is_interior(v)) continue;
      if (rising ? h[v] >= target[v] : h[v] <= target[v]) continue;
      const detail::Block b = detail::block_at(r, v);
      const detail::BlockState s = detail::block_state(p, b);
      if (s == detail::BlockState::None || detail::flip_raises(r.vertices()[v], s) != rising) {
        continue;
      }
      detail::flip_block(p, b);
      h[v] += rising ? 4 : -4;
      gap -= 4;
      if (path) path->push_back({r.vertices()[v]});
      moved = true;
    }
    if (!moved) throw std::logic_error("no monotone flip towards the target heights");
  }
}

}  // namespace

int HeightFunction::at(Vertex v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw InvalidArgument("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                          ") has no height");
  }
  return values[static_cast<std::size_t>(it - vertices.begin())];
}

Vertex base_vertex(const Region& r) {
  if (r.empty()) throw InvalidArgument("empty region has no base vertex");
  // The smallest vertex overall always lies on the boundary.
  return r.vertices().front();
}

HeightFunction height_function(const Region& r, const Tiling& t) {
  require_simply_connected(r);
  return wrap(r, heights_of(r, detail::to_partners(r, t)));
}

long long distance_height(const Region& r, const Tiling& t1, const Tiling& t2) {
  const HeightFunction h1 = height_function(r, t1);
  const HeightFunction h2 = height_function(r, t2);
  long long total = 0;
  for (std::size_t i = 0; i < h1.values.size(); ++i) total += std::abs(h1.values[i] - h2.values[i]);
  if (total % 4 != 0) throw std::logic_error("height difference is not a multiple of 4");
  return total / 4;
}

Tiling tiling_from_height(const Region& r, const HeightFunction& h) {
  require_simply_connected(r);
  if (h.vertices.size() != r.vertices().size() || h.values.size() != h.vertices.size() ||
      !std::equal(h.vertices.begin(), h.vertices.end(), r.vertices().begin())) {
    throw InvalidHeight("height function is defined on a different vertex set");
  }
  detail::Partners p(r.size(), kNoIndex);
  for (std::size_t u = 0; u < h.vertices.size(); ++u) {
    const auto& edges = edges_at(r, h.vertices[u]);
    // Right and up edges visit every unit edge exactly once.
    for (std::size_t k = 0; k < 2; ++k) {
      const EdgeView& e = edges[k];
      if (e.to == kNoIndex) continue;
      const int rise = e.sign * (h.values[static_cast<std::size_t>(e.to)] - h.values[u]);
      if (rise == 1) continue;
      if (rise != -3 || e.cell_a == kNoIndex || e.cell_b == kNoIndex) {
        throw InvalidHeight("edge at (" + std::to_string(h.vertices[u].x) + "," +
                            std::to_string(h.vertices[u].y) + ") has height step " +
                            std::to_string(rise));
      }
      auto& pa = p[static_cast<std::size_t>(e.cell_a)];
      auto& pb = p[static_cast<std::size_t>(e.cell_b)];
      if (pa != kNoIndex || pb != kNoIndex) throw InvalidHeight("height steps imply overlapping dominoes");
      pa = e.cell_b;
      pb = e.cell_a;
    }
  }
  if (std::find(p.begin(), p.end(), kNoIndex) != p.end()) {
    throw InvalidHeight("height steps leave cells uncovered");
  }
  if (heights_of(r, p) != h.values) throw InvalidHeight("height function is not normalised at the base vertex");
  return detail::from_partners(r, p);
}

namespace {

Tiling combine(const Region& r, const Tiling& t1, const Tiling& t2, bool upper) {
  HeightFunction h = height_function(r, t1);
  const HeightFunction h2 = height_function(r, t2);
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    h.values[i] = upper ? std::max(h.values[i], h2.values[i]) : std::min(h.values[i], h2.values[i]);
  }
  return tiling_from_height(r, h);
}

}  // namespace

Tiling join(const Region& r, const Tiling& t1, const Tiling& t2) { return combine(r, t1, t2, true); }

Tiling meet(const Region& r, const Tiling& t1, const Tiling& t2) { return combine(r, t1, t2, false); }

std::pair<Tiling, Tiling> extremal_tilings(const Region& r) {
  require_simply_connected(r);
  const std::optional<Tiling> start = find_tiling(r);
  if (!start) throw Untileable("region has no domino tiling");

  auto sweep = [&r](detail::Partners p, bool rising) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t v = 0; v < r.vertices().size() && !moved; ++v) {
        if (!r.is_interior(v)) continue;
        const detail::Block b = detail::block_at(r, v);
        const detail::BlockState s = detail::block_state(p, b);
        if (s != detail::BlockState::None && detail::flip_raises(r.vertices()[v], s) == rising) {
          detail::flip_block(p, b);
          moved = true;
        }
      }
    }
    return detail::from_partners(r, p);
  };
  const detail::Partners p = detail::to_partners(r, *start);
  return {sweep(p, false), sweep(p, true)};
}

std::vector<FlipMove> geodesic(const Region& r, const Tiling& t1, const Tiling& t2) {
  require_simply_connected(r);
  detail::Partners p = detail::to_partners(r, t1);
  std::vector<int> h = heights_of(r, p);
  const std::vector<int> h2 = heights_of(r, detail::to_partners(r, t2));
  std::vector<int> top(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) top[i] = std::max(h[i], h2[i]);

  std::vector<FlipMove> path;
  walk_towards(r, p, h, top, true, &path);
  walk_towards(r, p, h, h2, false, &path);
  return path;
}

}  // namespace domino
