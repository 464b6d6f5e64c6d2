#include "ccflow/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace ccflow {

Graph watts_strogatz(NodeId n, NodeId k, double beta, std::uint64_t seed) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("watts_strogatz: k must be even and >= 2");
  if (k >= n) throw std::invalid_argument("watts_strogatz: need n > k");
  if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("watts_strogatz: beta must be in [0, 1]");
  Rng rng(seed);

  std::vector<std::set<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId j = 1; j <= k / 2; ++j) {
      const NodeId v = (u + j) % n;
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }

  // Each node owns its k/2 clockwise lattice edges; rewiring replaces the far
  // endpoint. A rejected target (self or existing edge) is redrawn up to n
  // times, after which the original edge stays, so |E| is preserved exactly.
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId j = 1; j <= k / 2; ++j) {
      const NodeId v = (u + j) % n;
      if (!rng.bernoulli(beta)) continue;
      for (NodeId attempt = 0; attempt < n; ++attempt) {
        const NodeId w = static_cast<NodeId>(rng.below(n));
        if (w == u || adj[u].count(w)) continue;
        adj[u].erase(v);
        adj[v].erase(u);
        adj[u].insert(w);
        adj[w].insert(u);
        break;
      }
    }
  }

  GraphBuilder builder(n);
  for (NodeId u = 0; u < n; ++u) {
    for (const NodeId v : adj[u]) {
      if (u < v) builder.add_edge(u, v);
    }
  }
  return builder.build();
}

namespace {

/// m distinct values sampled from a multiset, in draw order. The multiset is
/// degree-weighted, which makes this the preferential-attachment draw.
std::vector<NodeId> distinct_subset(const std::vector<NodeId>& multiset, NodeId m, Rng& rng) {
  std::vector<NodeId> picked;
  picked.reserve(m);
  while (picked.size() < m) {
    const NodeId x = multiset[rng.below(multiset.size())];
    if (std::find(picked.begin(), picked.end(), x) == picked.end()) picked.push_back(x);
  }
  return picked;
}

} // namespace

Graph clustered_power_law(NodeId n, NodeId m, double p, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("clustered_power_law: m must be >= 1");
  if (n <= m) throw std::invalid_argument("clustered_power_law: need n > m");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("clustered_power_law: p must be in [0, 1]");
  Rng rng(seed);

  std::vector<std::set<NodeId>> adj(n);
  std::vector<NodeId> repeated;  // one entry per edge endpoint plus the start nodes
  repeated.reserve(2 * static_cast<std::size_t>(n) * m);
  for (NodeId v = 0; v < m; ++v) repeated.push_back(v);

  const auto add_edge = [&](NodeId u, NodeId v) {
    adj[u].insert(v);
    adj[v].insert(u);
    repeated.push_back(v);
  };

  for (NodeId source = m; source < n; ++source) {
    std::vector<NodeId> targets = distinct_subset(repeated, m, rng);
    std::size_t next_target = 0;

    NodeId target = targets[next_target++];
    add_edge(source, target);
    NodeId attached = 1;

    while (attached < m) {
      bool closed = false;
      if (rng.bernoulli(p)) {
        // Triad step: connect to a neighbor of the previous target that is
        // not the source and not already adjacent to it.
        std::vector<NodeId> candidates;
        for (const NodeId w : adj[target]) {
          if (w != source && !adj[source].count(w)) candidates.push_back(w);
        }
        if (!candidates.empty()) {
          const NodeId w = candidates[rng.below(candidates.size())];
          add_edge(source, w);
          ++attached;
          closed = true;
        }
      }
      if (!closed) {
        target = targets[next_target++];
        add_edge(source, target);
        ++attached;
      }
    }
    for (NodeId i = 0; i < m; ++i) repeated.push_back(source);
  }

  GraphBuilder builder(n);
  for (NodeId u = 0; u < n; ++u) {
    for (const NodeId v : adj[u]) {
      if (u < v) builder.add_edge(u, v);
    }
  }
  return builder.build();
}

TwoCommunityGraph two_disconnected_ws(NodeId n, NodeId k, double beta, std::uint64_t seed) {
  const Graph a = watts_strogatz(n, k, beta, derive_seed(seed, 0));
  const Graph b = watts_strogatz(n, k, beta, derive_seed(seed, 1));
  GraphBuilder builder(2 * n);
  for (const auto& [u, v] : a.edges()) builder.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) builder.add_edge(n + u, n + v);
  return {builder.build(), n};
}

} // namespace ccflow
