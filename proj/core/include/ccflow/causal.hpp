#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ccflow/contagion.hpp"
#include "ccflow/graph.hpp"

namespace ccflow {

/// Accumulated causal importance counts. ni_raw is per node; ti_raw has one
/// counter per edge direction (Graph::directed_slot layout), tracked
/// independently per orientation. Counts are exact integers, so merging
/// partial tables is associative and order-independent.
struct CausalScores {
  std::vector<std::uint64_t> ni_raw;
  std::vector<std::uint64_t> ti_raw;
  std::uint64_t runs_aggregated = 0;  // seed sets accumulated

  // Filled by normalize(): max-normalized values in [0, 1].
  std::vector<double> ni_norm;
  std::vector<double> ti_norm;
  bool all_zero = false;  // set when nothing ever activated

  explicit CausalScores(const Graph& g)
      : ni_raw(g.node_count(), 0), ti_raw(g.directed_slot_count(), 0) {}
  CausalScores() = default;

  void merge(const CausalScores& other);

  /// Divides by the global max in each category. With all counts zero the
  /// normalized scores are defined as 0 and all_zero is flagged.
  void normalize();
};

struct CausalSubgraph {
  std::vector<NodeId> nodes;  // sorted
  /// Time-ordered directed edges (u, v) with tau_u < tau_v; forms a DAG.
  std::vector<std::pair<NodeId, NodeId>> edges;
};

/// Back-traces the activation chain of target: the smallest node set holding
/// target and, for each member, every active neighbor that activated
/// strictly earlier; edges are all graph edges inside the set oriented
/// earlier -> later (equal times never link). Throws std::invalid_argument
/// when target never activated.
CausalSubgraph causal_subgraph(const CascadeRecord& record, const Graph& g, NodeId target);

/// Accumulates one converged cascade into scores: for every active node m,
/// every node of m's causal subgraph gains an NI count and every directed
/// edge of it a TI count. Equivalent to running causal_subgraph per target;
/// implemented as a reverse-topological reachability sweep (64 targets per
/// pass), which visits each edge O(|V|/64) times instead of O(|V|).
void accumulate(const CascadeRecord& record, const Graph& g, CausalScores& scores);

struct AggregateOptions {
  SeedMode seed_mode = SeedMode::clustered;
  double seed_fraction = 0.05;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct AggregateResult {
  CausalScores scores;        // normalized
  std::uint64_t runs = 0;
  double density_sum = 0.0;   // sum of per-run spreading densities
  std::uint64_t full_activation_runs = 0;

  double mean_density() const {
    return runs ? density_sum / static_cast<double>(runs) : 0.0;
  }
  double full_activation_fraction() const {
    return runs ? static_cast<double>(full_activation_runs) / static_cast<double>(runs) : 0.0;
  }
};

/// Runs `total_runs` independent seeded cascades (per-run RNG streams derived
/// from options.seed), accumulating one CausalScores, then normalizes once.
/// Deterministic for any thread count.
AggregateResult aggregate_runs(const Graph& g, const ModelSpec& model,
                               std::uint64_t total_runs, const AggregateOptions& options);

/// Same engine driven by an explicit seed-set schedule (one cascade each).
AggregateResult aggregate_seed_sets(const Graph& g, const ModelSpec& model,
                                    std::span<const SeedSet> seed_sets,
                                    std::uint64_t seed, int threads);

/// sweeps * |V| independent cascades; a sweep is |V| runs.
CausalScores aggregate_sweeps(const Graph& g, const ModelSpec& model, int sweeps,
                              const AggregateOptions& options);

} // namespace ccflow
