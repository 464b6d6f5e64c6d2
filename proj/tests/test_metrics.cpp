#include "ccflow/edge_list.hpp"
#include "ccflow/metrics.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ccflow;
using namespace ccflow::testutil;

#ifndef CCFLOW_FIXTURE_DIR
#define CCFLOW_FIXTURE_DIR "tests/fixtures"
#endif

TEST_SUITE_BEGIN("metrics");

namespace {

std::vector<std::uint32_t> uniform_thresholds(const Graph& g, std::uint32_t t) {
  return std::vector<std::uint32_t>(g.node_count(), t);
}

CausalScores exhaustive_single_seed_scores(const Graph& g, std::uint32_t t) {
  CausalScores scores(g);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    const auto record = run_gi(g, seeds_of({s}), uniform_thresholds(g, t));
    accumulate(record, g, scores);
  }
  return scores;
}

SeedSet labeled_seeds(const LabeledGraph& lg, char prefix) {
  SeedSet seeds;
  for (NodeId v = 0; v < lg.graph.node_count(); ++v) {
    if (lg.labels[v][0] == prefix) seeds.members.push_back(v);
  }
  return seeds;
}

} // namespace

TEST_CASE("edge-transitive exhaustive enumeration is perfectly symmetric") {
  // On a cycle every directed tie count matches its reverse exactly; the
  // variance across pairs is zero, so the correlation is undefined rather
  // than 1 here.
  const Graph g = cycle_graph(7);
  const auto scores = exhaustive_single_seed_scores(g, 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(scores.ti_raw[2 * static_cast<std::size_t>(e)] ==
          scores.ti_raw[2 * static_cast<std::size_t>(e) + 1]);
  }
  const auto report = flow_symmetry(scores, g);
  CHECK(report.n_edges == g.edge_count());
  CHECK(!report.defined);
}

TEST_CASE("triangle with exhaustive seeds is symmetric, variance zero") {
  const Graph g = complete_graph(3);
  const auto scores = exhaustive_single_seed_scores(g, 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(scores.ti_raw[2 * static_cast<std::size_t>(e)] ==
          scores.ti_raw[2 * static_cast<std::size_t>(e) + 1]);
  }
  CHECK(!flow_symmetry(scores, g).defined);
}

TEST_CASE("one-way chains leave the reverse direction empty") {
  // Path seeded only from one end: the reverse tie vector is all zeros, so
  // the statistic is undefined.
  const Graph g = path_graph(6);
  CausalScores scores(g);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  accumulate(record, g, scores);
  const auto report = flow_symmetry(scores, g);
  CHECK(!report.defined);
}

TEST_CASE("bridge orientation: asymmetric fixture scores below symmetric one") {
  const auto sym = load_edge_list_file(std::string(CCFLOW_FIXTURE_DIR) + "/symmetric_bridge.edges");
  const auto asym = load_edge_list_file(std::string(CCFLOW_FIXTURE_DIR) + "/asymmetric_bridge.edges");

  // Seed families from both communities: every within-community edge pair.
  const auto xi_for = [](const LabeledGraph& lg) {
    ModelSpec model;
    model.threshold = {ThresholdMode::absolute, 2.0, NeighborhoodMode::closed};
    std::vector<SeedSet> families;
    for (const auto& [u, v] : lg.graph.edges()) {
      if (lg.labels[u][0] == lg.labels[v][0]) families.push_back(seeds_of({u, v}));
    }
    const auto result = aggregate_seed_sets(lg.graph, model, families, 11, 1);
    return flow_symmetry(result.scores, lg.graph);
  };

  const auto xi_sym = xi_for(sym);
  const auto xi_asym = xi_for(asym);
  REQUIRE(xi_sym.defined);
  REQUIRE(xi_asym.defined);
  CHECK(xi_asym.xi_s < xi_sym.xi_s);
}

TEST_CASE("zero-pair edges can be excluded") {
  // A seeded path plus a component the cascade never reaches: its edge stays
  // (0, 0) and only enters the statistic in the inclusive variant.
  GraphBuilder b(5);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(3, 4);
  const Graph g = b.build();
  CausalScores scores(g);
  const auto record = run_gi(g, seeds_of({0}), uniform_thresholds(g, 1));
  accumulate(record, g, scores);
  const auto all = flow_symmetry(scores, g, true);
  const auto active_only = flow_symmetry(scores, g, false);
  CHECK(all.n_edges == 3);
  CHECK(active_only.n_edges == 2);
}

TEST_CASE("symmetry is invariant under count scaling") {
  Rng graph_rng(5150);
  const Graph g = gnp(16, 0.3, graph_rng);
  ModelSpec model;
  model.threshold = {ThresholdMode::absolute, 2.0, NeighborhoodMode::closed};
  AggregateOptions options;
  options.seed = 3;
  options.seed_fraction = 0.2;
  auto result = aggregate_runs(g, model, 200, options);
  const auto base = flow_symmetry(result.scores, g);
  CausalScores scaled = result.scores;
  for (auto& v : scaled.ti_raw) v *= 17;
  const auto rescaled = flow_symmetry(scaled, g);
  REQUIRE(base.defined);
  CHECK(rescaled.xi_s == doctest::Approx(base.xi_s).epsilon(1e-12));
}

TEST_CASE("node relabeling leaves the symmetry statistic unchanged") {
  // Reversing all node indices flips every canonical edge orientation; under
  // a deterministic exhaustive protocol the statistic must not move.
  Rng graph_rng(606);
  const Graph g = gnp(14, 0.35, graph_rng);
  const NodeId n = g.node_count();
  GraphBuilder reversed_builder(n);
  for (const auto& [u, v] : g.edges()) reversed_builder.add_edge(n - 1 - u, n - 1 - v);
  const Graph reversed = reversed_builder.build();

  const auto forward_scores = exhaustive_single_seed_scores(g, 1);
  const auto reversed_scores = exhaustive_single_seed_scores(reversed, 1);
  const auto a = flow_symmetry(forward_scores, g);
  const auto b = flow_symmetry(reversed_scores, reversed);
  CHECK(a.defined == b.defined);
  if (a.defined) CHECK(a.xi_s == doctest::Approx(b.xi_s).epsilon(1e-12));

  const auto fa = flow_alignment(forward_scores, g);
  const auto fb = flow_alignment(reversed_scores, reversed);
  CHECK(fa.rho_ds_dk.has_value() == fb.rho_ds_dk.has_value());
  if (fa.rho_ds_dk) CHECK(*fa.rho_ds_dk == doctest::Approx(*fb.rho_ds_dk).epsilon(1e-12));
}

TEST_CASE("star hub is the causal backbone: positive degree correlation") {
  const Graph g = star_graph(5);  // n = 6
  const auto scores = exhaustive_single_seed_scores(g, 1);
  const auto alignment = flow_alignment(scores, g);
  REQUIRE(alignment.rho_ni_k.has_value());
  CHECK(*alignment.rho_ni_k > 0.0);
}

TEST_CASE("regular graphs leave the degree-difference correlation undefined") {
  const Graph g = cycle_graph(8);
  const auto scores = exhaustive_single_seed_scores(g, 1);
  const auto alignment = flow_alignment(scores, g);
  CHECK(!alignment.rho_ds_dk.has_value());
}

TEST_SUITE_END();
