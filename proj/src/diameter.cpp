#include "domino/diameter.hpp"

#include <numeric>
#include <string>

#include "domino/errors.hpp"

namespace domino {

namespace {

// Largest side accepted by the closed forms.
constexpr int kMaxSide = 100'000;

void check_side(int n, const char* what) {
  if (n < 1 || n > kMaxSide) {
    throw InvalidArgument(std::string(what) + " must lie in [1, " + std::to_string(kMaxSide) + "], got " +
                          std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(DiameterMethod m) noexcept {
  switch (m) {
    case DiameterMethod::Bfs:
      return "bfs";
    case DiameterMethod::Levels:
      return "levels";
    case DiameterMethod::ClosedForm:
      return "closed-form";
  }
  return "unknown";
}

DiameterReport diameter_bfs(const Region& r, std::size_t node_budget) {
  const FlipGraph g = build_flip_graph(r, node_budget);
  if (g.size() == 0) throw Untileable("region has no domino tiling");
  const GraphDiameter d = graph_diameter(g);
  DiameterReport report;
  report.value = static_cast<long long>(d.value);
  report.method = DiameterMethod::Bfs;
  report.realizers = std::make_pair(g.nodes[d.from], g.nodes[d.to]);
  return report;
}

long long diameter_levels(const Region& r) {
  const RingDecomposition rd = ring_decomposition(r);
  return std::accumulate(rd.levels.begin(), rd.levels.end(), 0LL);
}

long long diameter_square_closed(int n) {
  check_side(n, "square side");
  if (n % 2 != 0) throw InvalidArgument("odd square " + std::to_string(n) + " has no tiling");
  const long long k = n;
  return (k * k * k - k) / 6;
}

long long diameter_rectangle_closed(int m, int n) {
  check_side(m, "rectangle length");
  check_side(n, "rectangle width");
  if (m < n) throw InvalidArgument("rectangle closed form expects m >= n");
  if ((static_cast<long long>(m) * n) % 2 != 0) throw InvalidArgument("rectangle with odd area has no tiling");

  const long long M = m, N = n;
  const long long numerator = (n % 2 == 0) ? 3 * M * N * N - N * N * N - 2 * N
                                           : 3 * M * N * N - N * N * N + N - 3 * M;
  const long long closed = numerator / 12;

  long long sum = 0;
  for (long long i = 1; i <= (N + 1) / 2; ++i) sum += (N - (2 * i - 1)) * (M - (2 * i - 1));
  if (numerator % 12 != 0 || sum != closed) {
    throw std::logic_error("rectangle diameter forms disagree for " + std::to_string(m) + "x" +
                           std::to_string(n));
  }
  return closed;
}

long long diameter_aztec_closed(int n) {
  check_side(n, "Aztec order");
  const long long k = n;
  return (2 * k * k * k + 3 * k * k + k) / 6;
}

}  // namespace domino
