#include "ccflow/graph_analysis.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ccflow {

std::optional<std::uint32_t> tie_range(const Graph& g, NodeId u, NodeId v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("tie_range: (u, v) is not an edge");
  // BFS from u to v with the direct edge removed.
  constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> dist(g.node_count(), kUnseen);
  std::deque<NodeId> queue;
  dist[u] = 0;
  queue.push_back(u);
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    for (const NodeId y : g.neighbors(x)) {
      if (x == u && y == v) continue;
      if (dist[y] != kUnseen) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

namespace {

std::size_t mutual_neighbors(const Graph& g, NodeId u, NodeId v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

} // namespace

std::optional<double> structural_tie_strength(const Graph& g, NodeId u, NodeId v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("structural_tie_strength: (u, v) is not an edge");
  const double m = static_cast<double>(mutual_neighbors(g, u, v));
  const double denom = static_cast<double>(g.degree(u)) + static_cast<double>(g.degree(v)) - m - 2.0;
  if (denom == 0.0) return std::nullopt;
  return m / denom;
}

TieTerciles tie_strength_terciles(const Graph& g) {
  TieTerciles result;
  result.edge_class.assign(g.edge_count(), -1);

  std::vector<std::pair<double, EdgeId>> defined;
  defined.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge_endpoints(e);
    if (const auto s = structural_tie_strength(g, u, v)) {
      defined.emplace_back(*s, e);
    } else {
      ++result.undefined_edges;
    }
  }
  if (defined.size() < 3)
    throw std::runtime_error("tie_strength_terciles: need at least 3 defined-strength edges");

  std::sort(defined.begin(), defined.end());

  const std::size_t q = defined.size() / 3;
  const std::size_t r = defined.size() % 3;
  result.sizes = {q + (r > 0 ? 1 : 0), q + (r > 1 ? 1 : 0), q};
  std::size_t pos = 0;
  for (std::size_t cls = 0; cls < 3; ++cls) {
    for (std::size_t i = 0; i < result.sizes[cls]; ++i, ++pos) {
      result.edge_class[defined[pos].second] = static_cast<std::int8_t>(cls);
    }
  }
  return result;
}

double mean_clustering_coefficient(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const NodeId d = g.degree(u);
    if (d < 2) continue;
    std::size_t links = 0;
    for (const NodeId v : g.neighbors(u)) links += mutual_neighbors(g, u, v);
    // Each triangle at u is counted twice across the neighbor scan.
    total += static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
  }
  return total / n;
}

} // namespace ccflow
