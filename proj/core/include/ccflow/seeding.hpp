#pragma once

#include <cstdint>
#include <vector>

#include "ccflow/graph.hpp"
#include "ccflow/rng.hpp"

namespace ccflow {

struct SeedSet {
  std::vector<NodeId> members;  // sorted, unique
  double fraction = 0.0;        // requested fraction p
};

enum class SeedMode : std::uint8_t { random, clustered };

/// ceil(p * node_count), clamped to [1, node_count]. p must be in (0, 1].
NodeId seed_target_size(const Graph& g, double p);

/// Uniform sample without replacement of ceil(p*|V|) nodes.
SeedSet random_seed_set(const Graph& g, double p, Rng& rng);

/// Clustered sample: grow from a uniform start node by repeatedly adding a
/// uniform node from the frontier (unseeded neighbors of the current set);
/// when the frontier empties before the target size is reached, restart from
/// a uniform unseeded node and keep growing. Every member ends up with at
/// least one member neighbor unless its component has size 1 (or the target
/// size is 1).
SeedSet random_clustered_seed_set(const Graph& g, double p, Rng& rng);

SeedSet draw_seed_set(const Graph& g, SeedMode mode, double p, Rng& rng);

} // namespace ccflow
