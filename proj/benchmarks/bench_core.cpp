#include <benchmark/benchmark.h>

#include "ccflow/bridges.hpp"
#include "ccflow/causal.hpp"
#include "ccflow/contagion.hpp"
#include "ccflow/generators.hpp"
#include "ccflow/graph_analysis.hpp"

using namespace ccflow;

namespace {

Graph bench_graph(NodeId n) { return watts_strogatz(n, 8, 0.1, 7); }

void BM_watts_strogatz(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(watts_strogatz(n, 8, 0.1, seed++));
  }
}
BENCHMARK(BM_watts_strogatz)->Arg(200)->Arg(1000)->Arg(5000);

void BM_clustered_power_law(benchmark::State& state) {
  const auto n = static_cast<NodeId>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(clustered_power_law(n, 4, 0.4, seed++));
  }
}
BENCHMARK(BM_clustered_power_law)->Arg(1000)->Arg(5000);

void BM_gi_cascade(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeId>(state.range(0)));
  const std::vector<std::uint32_t> thresholds(g.node_count(), 2);
  Rng rng(3);
  const SeedSet seeds = random_clustered_seed_set(g, 0.05, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_gi(g, seeds, thresholds));
  }
}
BENCHMARK(BM_gi_cascade)->Arg(200)->Arg(1000)->Arg(5000);

void BM_causal_accumulate(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeId>(state.range(0)));
  const std::vector<std::uint32_t> thresholds(g.node_count(), 2);
  Rng rng(3);
  const SeedSet seeds = random_clustered_seed_set(g, 0.05, rng);
  const CascadeRecord record = run_gi(g, seeds, thresholds);
  CausalScores scores(g);
  for (auto _ : state) {
    accumulate(record, g, scores);
  }
}
BENCHMARK(BM_causal_accumulate)->Arg(200)->Arg(1000)->Arg(5000);

void BM_aggregate_sweep(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeId>(state.range(0)));
  ModelSpec model;
  model.threshold = {ThresholdMode::absolute, 2.0, NeighborhoodMode::closed};
  AggregateOptions options;
  options.seed_fraction = 0.05;
  options.threads = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    options.seed = seed++;
    benchmark::DoNotOptimize(aggregate_runs(g, model, g.node_count(), options));
  }
}
BENCHMARK(BM_aggregate_sweep)->Args({400, 1})->Args({400, 2})->Args({1000, 2});

void BM_tie_range_all_edges(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<NodeId>(state.range(0)));
  for (auto _ : state) {
    std::size_t finite = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edge_endpoints(e);
      finite += tie_range(g, u, v).has_value();
    }
    benchmark::DoNotOptimize(finite);
  }
}
BENCHMARK(BM_tie_range_all_edges)->Arg(400);

void BM_bridge_trial(benchmark::State& state) {
  BridgeTrialParams params;
  params.max_ties = 60;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(bridge_formation_trial(params, rng));
  }
}
BENCHMARK(BM_bridge_trial);

} // namespace

BENCHMARK_MAIN();
