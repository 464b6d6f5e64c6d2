#include "ccflow/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccflow {

NodeId seed_target_size(const Graph& g, double p) {
  if (p <= 0.0 || p > 1.0) throw std::invalid_argument("seed fraction must be in (0, 1]");
  const double raw = p * static_cast<double>(g.node_count());
  // Guard against float dust pushing exact-integer products over the ceiling.
  auto s = static_cast<std::int64_t>(std::ceil(raw - 1e-9));
  s = std::max<std::int64_t>(s, 1);
  s = std::min<std::int64_t>(s, g.node_count());
  return static_cast<NodeId>(s);
}

SeedSet random_seed_set(const Graph& g, double p, Rng& rng) {
  const NodeId s = seed_target_size(g, p);
  return {rng.sample_without_replacement(g.node_count(), s), p};
}

SeedSet random_clustered_seed_set(const Graph& g, double p, Rng& rng) {
  const NodeId n = g.node_count();
  const NodeId s = seed_target_size(g, p);
  if (n == 0) return {{}, p};

  std::vector<char> seeded(n, 0);
  std::vector<char> queued(n, 0);
  std::vector<NodeId> members;
  members.reserve(s);
  std::vector<NodeId> frontier;

  const auto add_member = [&](NodeId v) {
    seeded[v] = 1;
    members.push_back(v);
    for (const NodeId u : g.neighbors(v)) {
      if (!seeded[u] && !queued[u]) {
        queued[u] = 1;
        frontier.push_back(u);
      }
    }
  };

  const auto pick_restart = [&]() -> NodeId {
    std::vector<NodeId> unseeded;
    unseeded.reserve(n - members.size());
    for (NodeId v = 0; v < n; ++v) {
      if (!seeded[v]) unseeded.push_back(v);
    }
    if (members.size() + 1 == s) {
      // Last slot: a degree-0 node (component of size 1) keeps the
      // seed-neighbor invariant satisfiable; prefer one if present.
      std::vector<NodeId> isolated;
      for (const NodeId v : unseeded) {
        if (g.degree(v) == 0) isolated.push_back(v);
      }
      if (!isolated.empty()) return isolated[rng.below(isolated.size())];
    }
    return unseeded[rng.below(unseeded.size())];
  };

  add_member(static_cast<NodeId>(rng.below(n)));
  while (members.size() < s) {
    if (frontier.empty()) {
      add_member(pick_restart());
      continue;
    }
    const std::size_t i = rng.below(frontier.size());
    const NodeId v = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    queued[v] = 0;
    add_member(v);
  }

  std::sort(members.begin(), members.end());
  return {std::move(members), p};
}

SeedSet draw_seed_set(const Graph& g, SeedMode mode, double p, Rng& rng) {
  return mode == SeedMode::random ? random_seed_set(g, p, rng)
                                  : random_clustered_seed_set(g, p, rng);
}

} // namespace ccflow
