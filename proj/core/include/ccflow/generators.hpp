#pragma once

#include <cstdint>

#include "ccflow/graph.hpp"
#include "ccflow/rng.hpp"

namespace ccflow {

/// Ring lattice on n nodes with k/2 neighbors per side, each lattice edge
/// rewired with probability beta to a uniform non-self, non-duplicate target
/// (up to n attempts, then the original edge is kept). The edge count is
/// always n*k/2. k must be even, 2 <= k < n.
Graph watts_strogatz(NodeId n, NodeId k, double beta, std::uint64_t seed);

/// Growing scale-free graph with tunable clustering: every new node attaches
/// m times; after a degree-preferential attachment, each remaining step
/// closes a triangle from the previous target's neighborhood with
/// probability p, falling back to preferential attachment when no triangle
/// can be closed. p=0 is pure preferential attachment; the result is
/// connected and simple. Requires 1 <= m < n.
Graph clustered_power_law(NodeId n, NodeId m, double p, std::uint64_t seed);

struct TwoCommunityGraph {
  Graph graph;
  /// Nodes [0, community_size) form community A, the rest community B.
  NodeId community_size = 0;

  bool in_a(NodeId v) const { return v < community_size; }
};

/// Two independent Watts-Strogatz graphs on disjoint index ranges with no
/// cross edges; parameters as watts_strogatz, n per community.
TwoCommunityGraph two_disconnected_ws(NodeId n, NodeId k, double beta, std::uint64_t seed);

} // namespace ccflow
