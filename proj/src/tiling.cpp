#include "domino/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "domino/detail/matching.hpp"
#include "domino/errors.hpp"

namespace domino {

namespace {

bool adjacent(Cell p, Cell q) noexcept {
  return std::abs(p.x - q.x) + std::abs(p.y - q.y) == 1;
}

std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

}  // namespace

Domino make_domino(Cell p, Cell q) {
  if (!adjacent(p, q)) {
    throw InvalidArgument("cells " + to_string(p) + " and " + to_string(q) + " are not adjacent");
  }
  return p < q ? Domino{p, q} : Domino{q, p};
}

Tiling::Tiling(std::vector<Domino> dominoes) : dominoes_(std::move(dominoes)) {
  for (Domino& d : dominoes_) d = make_domino(d.a, d.b);
  std::sort(dominoes_.begin(), dominoes_.end());
}

bool Tiling::contains(const Domino& d) const noexcept {
  return std::binary_search(dominoes_.begin(), dominoes_.end(), d);
}

namespace detail {

Partners to_partners(const Region& r, const Tiling& t) {
  Partners p(r.size(), kNoIndex);
  for (const Domino& d : t.dominoes()) {
    const std::int32_t a = r.cell_index(d.a);
    const std::int32_t b = r.cell_index(d.b);
    if (a == kNoIndex || b == kNoIndex) {
      throw InvalidArgument("domino " + to_string(d.a) + "-" + to_string(d.b) +
                            " leaves the region");
    }
    if (p[static_cast<std::size_t>(a)] != kNoIndex || p[static_cast<std::size_t>(b)] != kNoIndex) {
      throw InvalidArgument("dominoes overlap at " + to_string(d.a) + "-" + to_string(d.b));
    }
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == kNoIndex) throw InvalidArgument("cell " + to_string(r.cells()[i]) + " is uncovered");
  }
  return p;
}

Tiling from_partners(const Region& r, const Partners& p) {
  std::vector<Domino> ds;
  ds.reserve(p.size() / 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (static_cast<std::size_t>(p[i]) > i) {
      ds.push_back({r.cells()[i], r.cells()[static_cast<std::size_t>(p[i])]});
    }
  }
  // Cells are sorted, so i < partner already yields canonical dominoes in order.
  return Tiling(std::move(ds));
}

Block block_at(const Region& r, std::size_t vertex_idx) {
  const Vertex v = r.vertices()[vertex_idx];
  return {r.cell_index({v.x - 1, v.y - 1}), r.cell_index({v.x, v.y - 1}),
          r.cell_index({v.x - 1, v.y}), r.cell_index({v.x, v.y})};
}

BlockState block_state(const Partners& p, const Block& b) {
  if (p[static_cast<std::size_t>(b.ll)] == b.lr && p[static_cast<std::size_t>(b.ul)] == b.ur) {
    return BlockState::Horizontal;
  }
  if (p[static_cast<std::size_t>(b.ll)] == b.ul && p[static_cast<std::size_t>(b.lr)] == b.ur) {
    return BlockState::Vertical;
  }
  return BlockState::None;
}

BlockState flip_block(Partners& p, const Block& b) {
  const BlockState s = block_state(p, b);
  auto pair = [&p](std::int32_t u, std::int32_t v) {
    p[static_cast<std::size_t>(u)] = v;
    p[static_cast<std::size_t>(v)] = u;
  };
  if (s == BlockState::Horizontal) {
    pair(b.ll, b.ul);
    pair(b.lr, b.ur);
  } else if (s == BlockState::Vertical) {
    pair(b.ll, b.lr);
    pair(b.ul, b.ur);
  }
  return s;
}

// The right arm (anchor -> anchor + (1,0)) is free under a horizontal pair and
// covered under a vertical one. Its positive direction points away from the
// anchor exactly when x + y is odd, so that parity decides the sign of the +-4 jump.
bool flip_raises(Vertex anchor, BlockState state) {
  const bool odd = ((anchor.x + anchor.y) % 2 + 2) % 2 == 1;
  return state == BlockState::Horizontal ? odd : (state == BlockState::Vertical && !odd);
}

std::string key_of(const Region& r, const Partners& p) {
  std::string key(p.size(), '\0');
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& nb = r.neighbors(i);
    for (char d = 0; d < 4; ++d) {
      if (nb[static_cast<std::size_t>(d)] == p[i]) {
        key[i] = d;
        break;
      }
    }
  }
  return key;
}

}  // namespace detail

bool is_valid_tiling(const Region& r, const Tiling& t) {
  try {
    (void)detail::to_partners(r, t);
  } catch (const InvalidArgument&) {
    return false;
  }
  return true;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Region& r, std::size_t limit) : r_(r), limit_(limit), p_(r.size(), kNoIndex) {}

  std::vector<Tiling> run() {
    if (r_.size() % 2 == 0 && r_.black_count() * 2 == r_.size()) descend(0);
    return std::move(out_);
  }

 private:
  void descend(std::size_t from) {
    while (from < p_.size() && p_[from] != kNoIndex) ++from;
    if (from == p_.size()) {
      if (out_.size() >= limit_) {
        throw ResourceLimit("more than " + std::to_string(limit_) + " tilings");
      }
      out_.push_back(detail::from_partners(r_, p_));
      return;
    }
    const auto& nb = r_.neighbors(from);
    // Right, then up: the only partners left for the smallest uncovered cell.
    for (std::size_t d : {std::size_t{0}, std::size_t{1}}) {
      const std::int32_t q = nb[d];
      if (q == kNoIndex || p_[static_cast<std::size_t>(q)] != kNoIndex) continue;
      p_[from] = q;
      p_[static_cast<std::size_t>(q)] = static_cast<std::int32_t>(from);
      descend(from + 1);
      p_[from] = kNoIndex;
      p_[static_cast<std::size_t>(q)] = kNoIndex;
    }
  }

  const Region& r_;
  std::size_t limit_;
  detail::Partners p_;
  std::vector<Tiling> out_;
};

}  // namespace

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
  return Enumerator(r, limit).run();
}

BigInt count_tilings(const Region& r) {
  if (r.empty()) return 1;
  if (r.size() % 2 != 0 || r.black_count() * 2 != r.size()) return 0;

  int min_x = r.cells().front().x, max_x = r.cells().back().x;
  int min_y = r.cells().front().y, max_y = min_y;
  for (const Cell& c : r.cells()) {
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  // Sweep along the longer side so the profile runs across the shorter one.
  const bool transpose = (max_y - min_y) > (max_x - min_x);
  const int cols = transpose ? (max_y - min_y + 1) : (max_x - min_x + 1);
  const int rows = transpose ? (max_x - min_x + 1) : (max_y - min_y + 1);
  if (rows > 30) throw ResourceLimit("profile width " + std::to_string(rows) + " exceeds 30");

  auto inside = [&](int c, int row) {
    if (c < 0 || c >= cols || row < 0 || row >= rows) return false;
    return transpose ? r.contains({min_x + row, min_y + c}) : r.contains({min_x + c, min_y + row});
  };

  // Bit `row` of a profile: that cell of the current column (rows not yet
  // visited) or of the next column (rows already visited) is already covered.
  using Profile = std::uint32_t;
  std::unordered_map<Profile, BigInt> cur{{0u, BigInt(1)}};
  std::unordered_map<Profile, BigInt> next;
  for (int c = 0; c < cols; ++c) {
    for (int row = 0; row < rows; ++row) {
      next.clear();
      const Profile bit = Profile{1} << row;
      for (const auto& [mask, ways] : cur) {
        if (!inside(c, row)) {
          if (!(mask & bit)) next[mask] += ways;
          continue;
        }
        if (mask & bit) {
          next[mask & ~bit] += ways;
          continue;
        }
        if (inside(c + 1, row)) next[mask | bit] += ways;
        const Profile up = Profile{1} << (row + 1);
        if (row + 1 < rows && inside(c, row + 1) && !(mask & up)) next[mask | up] += ways;
      }
      std::swap(cur, next);
    }
  }
  const auto it = cur.find(0u);
  return it == cur.end() ? BigInt(0) : it->second;
}

BigInt count_rectangle_closed_form(int m, int n) {
  if (m < 1 || n < 1) {
    throw InvalidArgument("rectangle dimensions must be positive, got " + std::to_string(m) +
                          "x" + std::to_string(n));
  }
  const long double pi = std::numbers::pi_v<long double>;
  long double product = 1.0L;
  for (int j = 1; j <= (m + 1) / 2; ++j) {
    const long double cj = std::cos(pi * j / (m + 1));
    for (int k = 1; k <= (n + 1) / 2; ++k) {
      const long double ck = std::cos(pi * k / (n + 1));
      product *= 4.0L * (cj * cj + ck * ck);
    }
  }
  const long double rounded = std::round(product);
  // A long double mantissa holds integers exactly only below 2^64.
  if (rounded >= 18446744073709551616.0L) {
    throw NumericInstability("closed-form count for " + std::to_string(m) + "x" +
                             std::to_string(n) + " exceeds exact floating-point range");
  }
  const long double residue = std::fabs(product - rounded) / std::max(1.0L, rounded);
  if (residue > 1e-6L) {
    throw NumericInstability("closed-form count for " + std::to_string(m) + "x" +
                             std::to_string(n) + " has rounding residue " +
                             std::to_string(static_cast<double>(residue)));
  }
  return BigInt(static_cast<unsigned long long>(rounded));
}

BigInt count_aztec_closed_form(int n) {
  if (n < 1) throw InvalidArgument("aztec diamond order must be >= 1, got " + std::to_string(n));
  BigInt v = 1;
  v <<= static_cast<unsigned>(n) * static_cast<unsigned>(n + 1) / 2;
  return v;
}

std::optional<Tiling> find_tiling(const Region& r) {
  if (r.size() % 2 != 0 || r.black_count() * 2 != r.size()) return std::nullopt;

  // Augmenting paths from black cells (Kuhn's algorithm, iterative DFS).
  detail::Partners mate(r.size(), kNoIndex);
  std::vector<std::uint32_t> stamp(r.size(), 0);
  std::uint32_t round = 0;
  struct Frame {
    std::int32_t cell;
    std::size_t dir;
  };
  std::vector<Frame> stack;
  std::vector<std::int32_t> via;  // white cell chosen at each black frame

  for (std::size_t s = 0; s < r.size(); ++s) {
    if (color_of(r.cells()[s]) != Color::Black) continue;
    ++round;
    stack.assign(1, {static_cast<std::int32_t>(s), 0});
    via.clear();
    bool augmented = false;
    while (!stack.empty() && !augmented) {
      Frame& f = stack.back();
      if (f.dir == 4) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const std::int32_t w = r.neighbors(static_cast<std::size_t>(f.cell))[f.dir++];
      if (w == kNoIndex || stamp[static_cast<std::size_t>(w)] == round) continue;
      stamp[static_cast<std::size_t>(w)] = round;
      via.push_back(w);
      const std::int32_t owner = mate[static_cast<std::size_t>(w)];
      if (owner == kNoIndex) {
        augmented = true;
        break;
      }
      stack.push_back({owner, 0});
    }
    if (!augmented) return std::nullopt;
    // stack[i].cell is matched to via[i] along the augmenting path.
    for (std::size_t i = 0; i < stack.size(); ++i) {
      const std::int32_t b = stack[i].cell;
      const std::int32_t w = via[i];
      mate[static_cast<std::size_t>(b)] = w;
      mate[static_cast<std::size_t>(w)] = b;
    }
  }
  return detail::from_partners(r, mate);
}

std::vector<FlipMove> available_flips(const Region& r, const Tiling& t) {
  const detail::Partners p = detail::to_partners(r, t);
  std::vector<FlipMove> out;
  for (std::size_t v = 0; v < r.vertices().size(); ++v) {
    if (!r.is_interior(v)) continue;
    if (detail::block_state(p, detail::block_at(r, v)) != detail::BlockState::None) {
      out.push_back({r.vertices()[v]});
    }
  }
  return out;
}

Tiling apply_flip(const Region& r, const Tiling& t, FlipMove f) {
  const std::int32_t v = r.vertex_index(f.anchor);
  if (v == kNoIndex || !r.is_interior(static_cast<std::size_t>(v))) {
    throw InvalidMove("anchor (" + std::to_string(f.anchor.x) + "," + std::to_string(f.anchor.y) +
                      ") is not an interior vertex");
  }
  detail::Partners p = detail::to_partners(r, t);
  if (detail::flip_block(p, detail::block_at(r, static_cast<std::size_t>(v))) ==
      detail::BlockState::None) {
    throw InvalidMove("no flippable pair at (" + std::to_string(f.anchor.x) + "," +
                      std::to_string(f.anchor.y) + ")");
  }
  return detail::from_partners(r, p);
}

}  // namespace domino
