#include <algorithm>

#include "ccflow/contagion.hpp"
#include "ccflow/edge_list.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ccflow;
using namespace ccflow::testutil;

#ifndef CCFLOW_FIXTURE_DIR
#define CCFLOW_FIXTURE_DIR "tests/fixtures"
#endif

TEST_SUITE_BEGIN("contagion");

namespace {

std::vector<std::uint32_t> uniform_thresholds(const Graph& g, std::uint32_t t) {
  return std::vector<std::uint32_t>(g.node_count(), t);
}

SeedSet labeled_seeds(const LabeledGraph& lg, char prefix) {
  SeedSet seeds;
  for (NodeId v = 0; v < lg.graph.node_count(); ++v) {
    if (lg.labels[v][0] == prefix) seeds.members.push_back(v);
  }
  return seeds;
}

} // namespace

TEST_CASE("relative thresholds use the ceiling over the closed neighborhood") {
  const Graph g = star_graph(4);  // center degree 4, leaves degree 1
  const auto t = resolve_thresholds(g, {ThresholdMode::relative, 0.25, NeighborhoodMode::closed});
  CHECK(t[0] == 2);  // ceil(0.25 * 5)
  CHECK(t[1] == 1);  // ceil(0.25 * 2)

  const auto open = resolve_thresholds(g, {ThresholdMode::relative, 0.25, NeighborhoodMode::open});
  CHECK(open[0] == 1);  // ceil(0.25 * 4)

  const Graph p = path_graph(3);
  const auto full = resolve_thresholds(p, {ThresholdMode::relative, 1.0, NeighborhoodMode::closed});
  CHECK(full[1] == 3);  // degree 2, closed size 3, exact integer stays exact

  const auto fixed = resolve_thresholds(p, {ThresholdMode::absolute, 3.0, NeighborhoodMode::closed});
  CHECK(fixed == std::vector<std::uint32_t>({3, 3, 3}));
}

TEST_CASE("exact-integer relative products resolve without float dust") {
  GraphBuilder b(6);
  for (NodeId i = 1; i < 6; ++i) b.add_edge(0, i);  // center degree 5
  const Graph g = b.build();
  // 0.2 * 5 must be 1 in open mode, not 2.
  const auto t = resolve_thresholds(g, {ThresholdMode::relative, 0.2, NeighborhoodMode::open});
  CHECK(t[0] == 1);
}

TEST_CASE("simple contagion wavefront on a path") {
  const Graph g = path_graph(3);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  CHECK(record.activation_time == std::vector<std::int32_t>({0, 1, 2}));
  CHECK(record.converged_at == 2);
}

TEST_CASE("hand-traced diamond at threshold 2") {
  // a-b, a-c, b-c, b-d, c-d; seeds {a, b}: c sees both seeds at t0, d sees
  // b and then c.
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  b.add_edge(1, 3);
  b.add_edge(2, 3);
  const Graph g = b.build();
  const auto record = run_gi(g, seeds_of({0, 1}), uniform_thresholds(g, 2));
  CHECK(record.activation_time[2] == 1);
  CHECK(record.activation_time[3] == 2);
}

TEST_CASE("bridge fixtures: spreading direction at threshold 2") {
  const auto sym = load_edge_list_file(std::string(CCFLOW_FIXTURE_DIR) + "/symmetric_bridge.edges");
  const auto asym = load_edge_list_file(std::string(CCFLOW_FIXTURE_DIR) + "/asymmetric_bridge.edges");

  const auto spreads = [](const LabeledGraph& lg, char from, char to) {
    const auto record =
        run_gi(lg.graph, labeled_seeds(lg, from), std::vector<std::uint32_t>(lg.graph.node_count(), 2));
    for (NodeId v = 0; v < lg.graph.node_count(); ++v) {
      if (lg.labels[v][0] == to && record.active(v)) return true;
    }
    return false;
  };

  CHECK(spreads(sym, 'r', 'g'));
  CHECK(spreads(sym, 'g', 'r'));
  CHECK(spreads(asym, 'r', 'g'));
  CHECK(!spreads(asym, 'g', 'r'));

  // Green-side seeding of the asymmetric graph activates exactly the greens.
  const auto record = run_gi(asym.graph, labeled_seeds(asym, 'g'),
                             std::vector<std::uint32_t>(asym.graph.node_count(), 2));
  CHECK(spreading_density(record, asym.graph) == 0.5);
}

TEST_CASE("homogeneous linear threshold on a star") {
  const Graph g = star_graph(4);
  LtmConfig config;
  config.phi = 0.5;
  Rng rng(1);
  const auto record = run_ltm(g, seeds_of({1, 2}), config, rng);
  CHECK(record.active(0));  // 2 * 0.25 reaches phi

  Rng rng2(1);
  LtmConfig strict;
  strict.phi = 0.6;
  const auto record2 = run_ltm(g, seeds_of({1, 2}), strict, rng2);
  CHECK(!record2.active(0));
}

TEST_CASE("phi = 1 requires the whole neighborhood") {
  const Graph g = path_graph(4);
  LtmConfig config;
  config.phi = 1.0;
  Rng rng(3);
  // Node 1 neighbors {0, 2}: with only node 0 active it never activates;
  // node 0's full neighborhood is {1}, so it would need 1 active.
  const auto record = run_ltm(g, seeds_of({0}), config, rng);
  CHECK(!record.active(1));
  CHECK(!record.active(2));

  // Seeding both neighbors activates node 1 through the exact sum 1.0.
  Rng rng2(3);
  const auto record2 = run_ltm(g, seeds_of({0, 2}), config, rng2);
  CHECK(record2.active(1));
}

TEST_CASE("sigma 0 gaussian weights reproduce the homogeneous outcome") {
  Rng graph_rng(12);
  for (int i = 0; i < 20; ++i) {
    const Graph g = gnp(20, 0.2, graph_rng);
    SeedSet seeds = seeds_of({0, 1, 2});
    LtmConfig homogeneous;
    homogeneous.phi = 0.4;
    LtmConfig degenerate;
    degenerate.weights = LtmConfig::Weights::gaussian;
    degenerate.sigma = 0.0;
    degenerate.phi = 0.4;
    Rng a(55), c(55);
    const auto h = run_ltm(g, seeds, homogeneous, a);
    const auto d = run_ltm(g, seeds, degenerate, c);
    CHECK(h.activation_time == d.activation_time);
  }
}

TEST_CASE("certain transmission equals simple contagion") {
  Rng graph_rng(31);
  for (int i = 0; i < 30; ++i) {
    const Graph g = gnp(18, 0.18, graph_rng);
    const SeedSet seeds = seeds_of({0, 3});
    Rng rng(1000 + i);
    const auto icm = run_icm(g, seeds, 1.0, rng);
    const auto gi = run_gi(g, seeds, uniform_thresholds(g, 1));
    CHECK(icm.activation_time == gi.activation_time);
  }
}

TEST_CASE("zero transmission leaves only the seeds") {
  const Graph g = complete_graph(6);
  Rng rng(2);
  const auto record = run_icm(g, seeds_of({0, 5}), 0.0, rng);
  CHECK(record.active_count() == 2);
  CHECK(record.converged_at == 0);
}

TEST_CASE("path transmission probability matches the exact product") {
  // Seed one end of a 3-path; the far end needs two successes: p = 0.25.
  const Graph g = path_graph(3);
  const SeedSet seeds = seeds_of({0});
  std::uint64_t hits = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(777, i));
    hits += run_icm(g, seeds, 0.5, rng).active(2);
  }
  const double estimate = static_cast<double>(hits) / trials;
  CHECK(estimate == doctest::Approx(0.25).epsilon(0.04));  // +-0.01 absolute
}

TEST_CASE("noise off reduces to the deterministic model") {
  Rng graph_rng(41);
  for (int i = 0; i < 30; ++i) {
    const Graph g = gnp(16, 0.25, graph_rng);
    const auto thresholds = uniform_thresholds(g, 2);
    Rng rng(5);
    const auto noisy = run_noisy(g, seeds_of({0, 1}), thresholds, 0.0, false, rng);
    const auto gi = run_gi(g, seeds_of({0, 1}), thresholds);
    CHECK(noisy.activation_time == gi.activation_time);
  }
}

TEST_CASE("guaranteed subthreshold adoption behaves as simple contagion") {
  Rng graph_rng(47);
  const Graph g = gnp(15, 0.2, graph_rng);
  const auto unreachable = uniform_thresholds(g, 100);  // above any degree
  Rng rng(6);
  const auto noisy = run_noisy(g, seeds_of({2}), unreachable, 1.0, false, rng);
  const auto simple = run_gi(g, seeds_of({2}), uniform_thresholds(g, 1));
  CHECK(noisy.activation_time == simple.activation_time);
}

TEST_CASE("single-transmission leaves each leaf one bernoulli draw") {
  const Graph g = star_graph(5);
  const auto thresholds = uniform_thresholds(g, 2);  // leaves can never meet it
  std::uint64_t activations = 0;
  std::uint64_t runs_with_late_activity = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(31337, i));
    const auto record = run_noisy(g, seeds_of({0}), thresholds, 0.3, true, rng);
    for (NodeId leaf = 1; leaf <= 5; ++leaf) {
      activations += record.active(leaf);
      if (record.activation_time[leaf] > 1) ++runs_with_late_activity;
    }
  }
  const double frequency = static_cast<double>(activations) / (5.0 * trials);
  CHECK(frequency == doctest::Approx(0.3).epsilon(0.034));  // +-0.01 absolute
  CHECK(runs_with_late_activity == 0);  // one chance only, never retried
}

TEST_CASE("density of full and seed-only activation") {
  const Graph g = complete_graph(8);
  const auto full = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  CHECK(spreading_density(full, g) == 1.0);
  const auto stuck = run_gi(g, seeds_of({0}), uniform_thresholds(g, 5));
  CHECK(spreading_density(stuck, g) == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("model invariants over randomized instances") {
  Rng master(20250809);
  for (int round = 0; round < 200; ++round) {
    Rng graph_rng(master.next_u64());
    const NodeId n = 6 + static_cast<NodeId>(master.below(20));
    const Graph g = gnp(n, 0.08 + master.unit() * 0.3, graph_rng);
    const std::uint32_t t = 1 + static_cast<std::uint32_t>(master.below(3));
    const auto thresholds = uniform_thresholds(g, t);
    Rng seed_rng(master.next_u64());
    const SeedSet seeds = random_seed_set(g, 0.05 + master.unit() * 0.4, seed_rng);

    const auto record = run_gi(g, seeds, thresholds);
    CHECK(gi_record_consistent(g, record, thresholds));
    CHECK(record.converged_at <= static_cast<std::int32_t>(n));

    // Determinism.
    const auto again = run_gi(g, seeds, thresholds);
    CHECK(record.activation_time == again.activation_time);

    // Threshold dominance: raising the threshold can only shrink the set.
    const auto stricter = run_gi(g, seeds, uniform_thresholds(g, t + 1));
    for (NodeId v = 0; v < n; ++v) {
      if (stricter.active(v)) CHECK(record.active(v));
    }

    // Simple contagion reaches the entire seed component.
    const auto simple = run_gi(g, seeds, uniform_thresholds(g, 1));
    NodeId count = 0;
    const auto component = connected_components(g, &count);
    std::vector<char> seeded_component(count, 0);
    for (const NodeId s : seeds.members) seeded_component[component[s]] = 1;
    for (NodeId v = 0; v < n; ++v)
      CHECK(simple.active(v) == static_cast<bool>(seeded_component[component[v]]));
  }
}

TEST_SUITE_END();
