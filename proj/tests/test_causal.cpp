#include <numeric>

#include "ccflow/causal.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ccflow;
using namespace ccflow::testutil;

TEST_SUITE_BEGIN("causal");

namespace {

std::vector<std::uint32_t> uniform_thresholds(const Graph& g, std::uint32_t t) {
  return std::vector<std::uint32_t>(g.node_count(), t);
}

/// Every unordered pair of adjacent nodes, as a clustered seed set of size 2.
std::vector<SeedSet> all_edge_seed_sets(const Graph& g) {
  std::vector<SeedSet> sets;
  sets.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) sets.push_back(seeds_of({u, v}));
  return sets;
}

} // namespace

TEST_CASE("path back-trace from the far end") {
  const Graph g = path_graph(3);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  const auto sub = causal_subgraph(record, g, 2);
  CHECK(sub.nodes == std::vector<NodeId>{0, 1, 2});
  CHECK(sub.edges == std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}});
}

TEST_CASE("a seed target back-traces to itself") {
  const Graph g = path_graph(3);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  const auto sub = causal_subgraph(record, g, 0);
  CHECK(sub.nodes == std::vector<NodeId>{0});
  CHECK(sub.edges.empty());
}

TEST_CASE("subgraph membership never includes later activations") {
  Rng master(99);
  for (int round = 0; round < 50; ++round) {
    Rng graph_rng(master.next_u64());
    const Graph g = gnp(12, 0.3, graph_rng);
    Rng seed_rng(master.next_u64());
    const SeedSet seeds = random_seed_set(g, 0.2, seed_rng);
    const auto record = run_gi(g, seeds, uniform_thresholds(g, 2));
    for (NodeId m = 0; m < g.node_count(); ++m) {
      if (!record.active(m)) {
        CHECK_THROWS_AS(causal_subgraph(record, g, m), std::invalid_argument);
        continue;
      }
      const auto sub = causal_subgraph(record, g, m);
      bool contains_seed = false;
      for (const NodeId v : sub.nodes) {
        CHECK((v == m || record.activation_time[v] < record.activation_time[m]));
        contains_seed = contains_seed || record.activation_time[v] == 0;
      }
      // The back-trace only terminates at seeds.
      CHECK(contains_seed);
      // DAG property: edges strictly increase in activation time.
      for (const auto& [u, v] : sub.edges) {
        CHECK(record.activation_time[u] < record.activation_time[v]);
      }
    }
  }
}

TEST_CASE("accumulate counts the path example") {
  const Graph g = path_graph(3);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  CausalScores scores(g);
  accumulate(record, g, scores);
  CHECK(scores.ni_raw == std::vector<std::uint64_t>{3, 2, 1});
  const EdgeId ab = *g.find_edge(0, 1);
  const EdgeId bc = *g.find_edge(1, 2);
  CHECK(scores.ti_raw[g.directed_slot(ab, 0)] == 2);
  CHECK(scores.ti_raw[g.directed_slot(ab, 1)] == 0);
  CHECK(scores.ti_raw[g.directed_slot(bc, 1)] == 1);
  CHECK(scores.ti_raw[g.directed_slot(bc, 2)] == 0);

  scores.normalize();
  CHECK(scores.ni_norm == std::vector<double>{1.0, 2.0 / 3.0, 1.0 / 3.0});
  CHECK(scores.ti_norm[g.directed_slot(ab, 0)] == 1.0);
  CHECK(scores.ti_norm[g.directed_slot(bc, 1)] == 0.5);
  CHECK(!scores.all_zero);
}

TEST_CASE("triangle symmetry under exhaustive single seeds") {
  const Graph g = complete_graph(3);
  CausalScores scores(g);
  for (NodeId s = 0; s < 3; ++s) {
    const auto record = run_gi(g, seeds_of({s}), uniform_thresholds(g, 1));
    accumulate(record, g, scores);
  }
  CHECK(scores.ni_raw[0] == scores.ni_raw[1]);
  CHECK(scores.ni_raw[1] == scores.ni_raw[2]);
}

TEST_CASE("aggregation is linear in repeated deterministic runs") {
  const Graph g = path_graph(5);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  CausalScores once(g), twice(g);
  accumulate(record, g, once);
  accumulate(record, g, twice);
  accumulate(record, g, twice);
  once.normalize();
  twice.normalize();
  for (NodeId v = 0; v < 5; ++v) {
    CHECK(twice.ni_raw[v] == 2 * once.ni_raw[v]);
    CHECK(twice.ni_norm[v] == once.ni_norm[v]);
  }
  CHECK(twice.runs_aggregated == 2);
}

TEST_CASE("count identity: node increments equal total subgraph sizes") {
  Rng master(512);
  for (int round = 0; round < 40; ++round) {
    Rng graph_rng(master.next_u64());
    const Graph g = gnp(14, 0.25, graph_rng);
    Rng seed_rng(master.next_u64());
    const SeedSet seeds = random_seed_set(g, 0.2, seed_rng);
    const auto record = run_gi(g, seeds, uniform_thresholds(g, 2));
    CausalScores scores(g);
    accumulate(record, g, scores);

    std::uint64_t total_members = 0;
    for (NodeId m = 0; m < g.node_count(); ++m) {
      if (record.active(m)) total_members += causal_subgraph(record, g, m).nodes.size();
    }
    const std::uint64_t ni_sum =
        std::accumulate(scores.ni_raw.begin(), scores.ni_raw.end(), std::uint64_t{0});
    CHECK(ni_sum == total_members);
  }
}

TEST_CASE("within one cascade at most one direction per edge is counted") {
  Rng master(77);
  for (int round = 0; round < 40; ++round) {
    Rng graph_rng(master.next_u64());
    const Graph g = gnp(13, 0.3, graph_rng);
    Rng seed_rng(master.next_u64());
    const SeedSet seeds = random_seed_set(g, 0.15, seed_rng);
    const auto record = run_gi(g, seeds, uniform_thresholds(g, 1));
    CausalScores scores(g);
    accumulate(record, g, scores);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const bool forward = scores.ti_raw[2 * static_cast<std::size_t>(e)] > 0;
      const bool backward = scores.ti_raw[2 * static_cast<std::size_t>(e) + 1] > 0;
      CHECK(!(forward && backward));
    }
  }
}

TEST_CASE("production accumulation matches the brute-force recursion") {
  Rng master(2718);
  for (int round = 0; round < 60; ++round) {
    Rng graph_rng(master.next_u64());
    const NodeId n = 5 + static_cast<NodeId>(master.below(8));
    const Graph g = gnp(n, 0.15 + master.unit() * 0.3, graph_rng);
    const std::uint32_t t = 1 + static_cast<std::uint32_t>(master.below(2));

    OracleScores oracle;
    CausalScores scores(g);
    for (const SeedSet& seeds : all_edge_seed_sets(g)) {
      const auto record = run_gi(g, seeds, uniform_thresholds(g, t));
      accumulate(record, g, scores);
      oracle_accumulate(g, record.activation_time, oracle);
    }
    CHECK(oracle_matches(g, oracle, scores));
  }
}

TEST_CASE("aggregate_seed_sets equals sequential accumulation for any thread count") {
  Rng graph_rng(4242);
  const Graph g = gnp(20, 0.2, graph_rng);
  const auto sets = all_edge_seed_sets(g);
  ModelSpec model;
  model.threshold = {ThresholdMode::absolute, 2.0, NeighborhoodMode::closed};

  const auto serial = aggregate_seed_sets(g, model, sets, 1, 1);
  const auto parallel = aggregate_seed_sets(g, model, sets, 1, 4);
  CHECK(serial.scores.ni_raw == parallel.scores.ni_raw);
  CHECK(serial.scores.ti_raw == parallel.scores.ti_raw);
  CHECK(serial.runs == sets.size());

  CausalScores manual(g);
  const auto thresholds = resolve_thresholds(g, model.threshold);
  for (const auto& seeds : sets) accumulate(run_gi(g, seeds, thresholds), g, manual);
  CHECK(manual.ni_raw == serial.scores.ni_raw);
  CHECK(manual.ti_raw == serial.scores.ti_raw);
}

TEST_CASE("aggregate_runs is deterministic across thread counts") {
  Rng graph_rng(31415);
  const Graph g = gnp(30, 0.15, graph_rng);
  ModelSpec model;
  model.family = ModelFamily::icm;
  model.icm_beta = 0.4;
  AggregateOptions options;
  options.seed_mode = SeedMode::random;
  options.seed_fraction = 0.1;
  options.seed = 7;
  options.threads = 1;
  const auto a = aggregate_runs(g, model, 64, options);
  options.threads = 3;
  const auto b = aggregate_runs(g, model, 64, options);
  CHECK(a.scores.ni_raw == b.scores.ni_raw);
  CHECK(a.scores.ti_raw == b.scores.ti_raw);
  CHECK(a.density_sum == b.density_sum);
}

TEST_CASE("normalization flags the all-zero case") {
  const Graph g = path_graph(4);
  CausalScores scores(g);
  scores.normalize();
  CHECK(scores.all_zero);
  for (const double v : scores.ni_norm) CHECK(v == 0.0);
}

TEST_SUITE_END();
