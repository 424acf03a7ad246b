#include "domino/flipgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "domino/detail/matching.hpp"
#include "domino/errors.hpp"
#include "domino/io.hpp"

namespace domino {

namespace {

std::vector<std::size_t> interior_vertex_ids(const Region& r) {
  std::vector<std::size_t> ids;
  for (std::size_t v = 0; v < r.vertices().size(); ++v) {
    if (r.is_interior(v)) ids.push_back(v);
  }
  return ids;
}

}  // namespace

std::size_t FlipGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

FlipGraph build_flip_graph(const Region& r, std::size_t node_budget) {
  const BigInt count = count_tilings(r);
  if (count > node_budget) {
    throw ResourceLimit("flip graph has " + count.str() + " nodes, budget is " +
                        std::to_string(node_budget));
  }
  FlipGraph g;
  g.nodes = enumerate_tilings(r);
  g.adjacency.resize(g.nodes.size());

  std::vector<detail::Partners> partners;
  partners.reserve(g.nodes.size());
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    partners.push_back(detail::to_partners(r, g.nodes[i]));
    index.emplace(detail::key_of(r, partners.back()), i);
  }

  const std::vector<std::size_t> anchors = interior_vertex_ids(r);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    detail::Partners& p = partners[i];
    for (std::size_t v : anchors) {
      const detail::Block b = detail::block_at(r, v);
      if (detail::block_state(p, b) == detail::BlockState::None) continue;
      detail::flip_block(p, b);
      g.adjacency[i].push_back(index.at(detail::key_of(r, p)));
      detail::flip_block(p, b);
    }
    std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
  }
  return g;
}

std::vector<std::size_t> bfs_from(const FlipGraph& g, std::size_t source) {
  if (source >= g.size()) throw InvalidArgument("node index " + std::to_string(source) + " out of range");
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::vector<std::size_t> frontier{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const std::size_t u = frontier[head];
    for (std::size_t w : g.adjacency[u]) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      frontier.push_back(w);
    }
  }
  return dist;
}

std::optional<std::size_t> bfs_distance(const FlipGraph& g, std::size_t i, std::size_t j) {
  if (j >= g.size()) throw InvalidArgument("node index " + std::to_string(j) + " out of range");
  const std::size_t d = bfs_from(g, i)[j];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::vector<std::vector<std::size_t>> connected_components(const FlipGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::uint8_t> seen(g.size(), 0);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> members{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t w : g.adjacency[members[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

GraphDiameter graph_diameter(const FlipGraph& g) {
  if (g.size() == 0) throw InvalidArgument("empty flip graph has no diameter");
  const std::size_t n = g.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> lower(n, 0), upper(n, kInf);
  std::vector<std::uint8_t> candidate(n, 1);
  std::size_t remaining = n;

  GraphDiameter best;
  bool pick_high = true;
  while (remaining > 0) {
    // Alternate: loosest upper bound, then smallest lower bound.
    std::size_t v = kInf;
    for (std::size_t w = 0; w < n; ++w) {
      if (!candidate[w]) continue;
      if (v == kInf || (pick_high ? upper[w] > upper[v] : lower[w] < lower[v])) v = w;
    }
    pick_high = !pick_high;

    const std::vector<std::size_t> dist = bfs_from(g, v);
    std::size_t ecc = 0, far = v;
    for (std::size_t w = 0; w < n; ++w) {
      if (dist[w] == kUnreachable) throw UnsupportedRegion("flip graph is disconnected");
      if (dist[w] > ecc) {
        ecc = dist[w];
        far = w;
      }
    }
    if (ecc > best.value || (best.value == 0 && best.from == best.to)) {
      best = {ecc, std::min(v, far), std::max(v, far)};
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (!candidate[w]) continue;
      lower[w] = std::max({lower[w], dist[w], ecc - dist[w]});
      upper[w] = std::min(upper[w], ecc + dist[w]);
      if (w == v || upper[w] <= best.value) {
        candidate[w] = 0;
        --remaining;
      }
    }
  }
  return best;
}

std::optional<std::size_t> flip_distance_search(const Region& r, const Tiling& t1, const Tiling& t2,
                                                std::size_t node_budget) {
  const detail::Partners start = detail::to_partners(r, t1);
  const std::string goal = detail::key_of(r, detail::to_partners(r, t2));
  std::string key = detail::key_of(r, start);
  if (key == goal) return 0;

  const std::vector<std::size_t> anchors = interior_vertex_ids(r);
  std::unordered_set<std::string> seen{key};
  std::vector<detail::Partners> layer{start};
  for (std::size_t depth = 1; !layer.empty(); ++depth) {
    std::vector<detail::Partners> next;
    for (detail::Partners& p : layer) {
      for (std::size_t v : anchors) {
        const detail::Block b = detail::block_at(r, v);
        if (detail::block_state(p, b) == detail::BlockState::None) continue;
        detail::flip_block(p, b);
        key = detail::key_of(r, p);
        if (key == goal) return depth;
        if (seen.insert(key).second) {
          if (seen.size() > node_budget) {
            throw ResourceLimit("flip search visited more than " + std::to_string(node_budget) +
                                " tilings");
          }
          next.push_back(p);
        }
        detail::flip_block(p, b);
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::string export_graph(const FlipGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    io::json nodes = io::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      io::json node = io::to_json(g.nodes[i]);
      node["id"] = i;
      nodes.push_back(std::move(node));
    }
    io::json edges = io::json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j : g.adjacency[i]) {
        if (i < j) edges.push_back(io::json::array({i, j}));
      }
    }
    return io::json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}}.dump() + "\n";
  }
  std::ostringstream out;
  out << "graph flips {\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << "  " << i << ";\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j : g.adjacency[i]) {
      if (i < j) out << "  " << i << " -- " << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace domino
