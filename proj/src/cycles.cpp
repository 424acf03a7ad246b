#include "domino/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "domino/detail/matching.hpp"
#include "domino/errors.hpp"

namespace domino {

long long ValueMap::total() const noexcept {
  long long sum = 0;
  for (std::size_t i = 0; i < plus.size(); ++i) sum += nu(i);
  return sum;
}

CycleCollection cycle_collection(const Region& r, const Tiling& t1, const Tiling& t2) {
  const detail::Partners first = detail::to_partners(r, t1);
  const detail::Partners second = detail::to_partners(r, t2);

  CycleCollection out;
  std::vector<std::uint8_t> used(r.size(), 0);
  for (std::size_t start = 0; start < r.size(); ++start) {
    if (used[start] || first[start] == second[start]) continue;
    OrientedCycle cycle;
    std::size_t at = start;
    do {
      used[at] = 1;
      cycle.cells.push_back(r.cells()[at]);
      // Black cells leave along their first-tiling domino, white cells along the second.
      const bool black = color_of(r.cells()[at]) == Color::Black;
      at = static_cast<std::size_t>(black ? first[at] : second[at]);
    } while (at != start);
    if (cycle.cells.size() < 4 || cycle.cells.size() % 2 != 0) {
      throw std::logic_error("degenerate alternating cycle");
    }
    cycle.orientation = doubled_signed_area(cycle.cells) > 0 ? 1 : -1;
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

long long doubled_signed_area(const std::vector<Cell>& cycle) {
  // Shoelace on centres (x + 1/2, y + 1/2); the offsets cancel around a closed loop.
  long long twice = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Cell& a = cycle[i];
    const Cell& b = cycle[(i + 1) % cycle.size()];
    twice += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
  }
  return twice;
}

int winding_number(const std::vector<Cell>& cycle, Vertex v) {
  // Cast a ray from v towards +x. In doubled coordinates centres are odd and
  // the vertex is even, so the ray never meets a polygon corner.
  const long long px = 2LL * v.x;
  const long long py = 2LL * v.y;
  int winding = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Cell& a = cycle[i];
    const Cell& b = cycle[(i + 1) % cycle.size()];
    if (a.x != b.x) continue;
    const long long ex = 2LL * a.x + 1;
    const long long ay = 2LL * a.y + 1;
    const long long by = 2LL * b.y + 1;
    if (ex <= px) continue;
    if (ay < py && py < by) ++winding;
    if (by < py && py < ay) --winding;
  }
  return winding;
}

ValueMap value_map(const Region& r, const CycleCollection& cc) {
  ValueMap out;
  out.vertices.assign(r.vertices().begin(), r.vertices().end());
  out.plus.assign(out.vertices.size(), 0);
  out.minus.assign(out.vertices.size(), 0);
  for (const OrientedCycle& c : cc.cycles) {
    // Only vertices inside the cycle's bounding box can be surrounded.
    int lo_x = c.cells.front().x, hi_x = lo_x, lo_y = c.cells.front().y, hi_y = lo_y;
    for (const Cell& cell : c.cells) {
      lo_x = std::min(lo_x, cell.x);
      hi_x = std::max(hi_x, cell.x);
      lo_y = std::min(lo_y, cell.y);
      hi_y = std::max(hi_y, cell.y);
    }
    for (int x = lo_x + 1; x <= hi_x; ++x) {
      for (int y = lo_y + 1; y <= hi_y; ++y) {
        const std::int32_t vi = r.vertex_index({x, y});
        if (vi == kNoIndex || winding_number(c.cells, {x, y}) == 0) continue;
        (c.orientation > 0 ? out.plus : out.minus)[static_cast<std::size_t>(vi)] += 1;
      }
    }
  }
  return out;
}

long long distance_cycles(const Region& r, const Tiling& t1, const Tiling& t2) {
  if (!is_simply_connected(r)) {
    throw UnsupportedRegion("cycle distance needs a simply connected region");
  }
  return value_map(r, cycle_collection(r, t1, t2)).total();
}

}  // namespace domino
