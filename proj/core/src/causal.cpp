#include "ccflow/causal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace ccflow {

void CausalScores::merge(const CausalScores& other) {
  if (ni_raw.size() != other.ni_raw.size() || ti_raw.size() != other.ti_raw.size())
    throw std::invalid_argument("CausalScores::merge: shape mismatch");
  for (std::size_t i = 0; i < ni_raw.size(); ++i) ni_raw[i] += other.ni_raw[i];
  for (std::size_t i = 0; i < ti_raw.size(); ++i) ti_raw[i] += other.ti_raw[i];
  runs_aggregated += other.runs_aggregated;
}

void CausalScores::normalize() {
  const auto scale = [](const std::vector<std::uint64_t>& raw, std::vector<double>& norm) {
    std::uint64_t max = 0;
    for (const auto v : raw) max = std::max(max, v);
    norm.assign(raw.size(), 0.0);
    if (max == 0) return false;
    for (std::size_t i = 0; i < raw.size(); ++i)
      norm[i] = static_cast<double>(raw[i]) / static_cast<double>(max);
    return true;
  };
  const bool any_ni = scale(ni_raw, ni_norm);
  scale(ti_raw, ti_norm);
  all_zero = !any_ni;
}

CausalSubgraph causal_subgraph(const CascadeRecord& record, const Graph& g, NodeId target) {
  if (target >= g.node_count() || !record.active(target))
    throw std::invalid_argument("causal_subgraph: target never activated");
  const auto& tau = record.activation_time;

  // Worklist closure over earlier-activated active neighbors.
  std::vector<char> in_set(g.node_count(), 0);
  std::vector<NodeId> work{target};
  in_set[target] = 1;
  CausalSubgraph result;
  while (!work.empty()) {
    const NodeId v = work.back();
    work.pop_back();
    result.nodes.push_back(v);
    for (const NodeId u : g.neighbors(v)) {
      if (in_set[u] || tau[u] < 0 || tau[u] >= tau[v]) continue;
      in_set[u] = 1;
      work.push_back(u);
    }
  }
  std::sort(result.nodes.begin(), result.nodes.end());

  for (const NodeId v : result.nodes) {
    for (const NodeId u : g.neighbors(v)) {
      if (in_set[u] && tau[u] < tau[v]) result.edges.emplace_back(u, v);
    }
  }
  return result;
}

void accumulate(const CascadeRecord& record, const Graph& g, CausalScores& scores) {
  const NodeId n = g.node_count();
  if (scores.ni_raw.size() != n || scores.ti_raw.size() != g.directed_slot_count())
    throw std::invalid_argument("accumulate: scores shape mismatch");
  const auto& tau = record.activation_time;

  // Active nodes in descending activation time; within a time level order is
  // irrelevant (equal times are never linked). This is a reverse topological
  // order of the cascade DAG (edges point earlier -> later).
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (tau[v] >= 0) order.push_back(v);
  }
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return tau[a] > tau[b]; });
  if (order.empty()) return;

  // reach[v] counts targets m whose causal subgraph contains v, i.e. nodes
  // reachable from v along time-increasing edges (v itself included). Each
  // pass propagates membership bits for a window of 64 target nodes.
  std::vector<std::uint64_t> reach(n, 0);
  std::vector<std::uint64_t> mask(n, 0);
  for (std::size_t window = 0; window < order.size(); window += 64) {
    const std::size_t window_end = std::min(window + 64, order.size());
    for (std::size_t i = window; i < window_end; ++i)
      mask[order[i]] = 1ULL << (i - window);
    for (const NodeId v : order) {
      std::uint64_t bits = mask[v];
      for (const NodeId u : g.neighbors(v)) {
        if (tau[u] > tau[v]) bits |= mask[u];
      }
      mask[v] = bits;
      reach[v] += static_cast<std::uint64_t>(std::popcount(bits));
    }
    for (const NodeId v : order) mask[v] = 0;
  }

  for (const NodeId v : order) scores.ni_raw[v] += reach[v];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge_endpoints(e);
    if (tau[u] < 0 || tau[v] < 0 || tau[u] == tau[v]) continue;
    const NodeId later = tau[u] < tau[v] ? v : u;
    const NodeId earlier = tau[u] < tau[v] ? u : v;
    // Every causal subgraph containing the later endpoint contains this edge.
    scores.ti_raw[g.directed_slot(e, earlier)] += reach[later];
  }
  scores.runs_aggregated += 1;
}

namespace {

template <typename RunCascade>
AggregateResult aggregate_engine(const Graph& g, std::uint64_t total_runs,
                                 std::uint64_t root_seed, int threads,
                                 RunCascade&& run_cascade) {
  const int worker_count =
      std::max(1, std::min<int>(threads, static_cast<int>(total_runs ? total_runs : 1)));

  std::vector<CausalScores> partial(worker_count, CausalScores(g));
  // Per-run diagnostics land in run-index slots and are reduced sequentially,
  // so results do not depend on the worker count.
  std::vector<double> density(total_runs, 0.0);
  std::vector<char> full(total_runs, 0);

  const auto work = [&](int w) {
    CausalScores& mine = partial[w];
    for (std::uint64_t r = w; r < total_runs; r += static_cast<std::uint64_t>(worker_count)) {
      Rng rng(derive_seed(root_seed, r));
      const CascadeRecord record = run_cascade(r, rng);
      accumulate(record, g, mine);
      density[r] = spreading_density(record, g);
      full[r] = (record.active_count() == g.node_count());
    }
  };

  if (worker_count == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  AggregateResult result;
  result.scores = std::move(partial[0]);
  for (int w = 1; w < worker_count; ++w) result.scores.merge(partial[w]);
  for (std::uint64_t r = 0; r < total_runs; ++r) {
    result.density_sum += density[r];
    result.full_activation_runs += full[r];
  }
  result.runs = total_runs;
  result.scores.normalize();
  return result;
}

} // namespace

AggregateResult aggregate_runs(const Graph& g, const ModelSpec& model,
                               std::uint64_t total_runs, const AggregateOptions& options) {
  // Thresholds of deterministic families resolve once outside the hot loop.
  const std::vector<std::uint32_t> thresholds =
      (model.family == ModelFamily::gi || model.family == ModelFamily::noisy ||
       model.family == ModelFamily::noisy_single)
          ? resolve_thresholds(g, model.threshold)
          : std::vector<std::uint32_t>{};

  return aggregate_engine(
      g, total_runs, options.seed, options.threads, [&](std::uint64_t, Rng& rng) {
        const SeedSet seeds = draw_seed_set(g, options.seed_mode, options.seed_fraction, rng);
        switch (model.family) {
          case ModelFamily::gi:
            return run_gi(g, seeds, thresholds);
          case ModelFamily::ltm:
            return run_ltm(g, seeds, model.ltm, rng);
          case ModelFamily::icm:
            return run_icm(g, seeds, model.icm_beta, rng);
          case ModelFamily::noisy:
            return run_noisy(g, seeds, thresholds, model.noise_q, false, rng);
          case ModelFamily::noisy_single:
            return run_noisy(g, seeds, thresholds, model.noise_q, true, rng);
        }
        throw std::logic_error("aggregate_runs: unknown family");
      });
}

AggregateResult aggregate_seed_sets(const Graph& g, const ModelSpec& model,
                                    std::span<const SeedSet> seed_sets,
                                    std::uint64_t seed, int threads) {
  const std::vector<std::uint32_t> thresholds =
      (model.family == ModelFamily::gi || model.family == ModelFamily::noisy ||
       model.family == ModelFamily::noisy_single)
          ? resolve_thresholds(g, model.threshold)
          : std::vector<std::uint32_t>{};

  return aggregate_engine(
      g, seed_sets.size(), seed, threads, [&](std::uint64_t r, Rng& rng) {
        const SeedSet& seeds = seed_sets[r];
        switch (model.family) {
          case ModelFamily::gi:
            return run_gi(g, seeds, thresholds);
          case ModelFamily::ltm:
            return run_ltm(g, seeds, model.ltm, rng);
          case ModelFamily::icm:
            return run_icm(g, seeds, model.icm_beta, rng);
          case ModelFamily::noisy:
            return run_noisy(g, seeds, thresholds, model.noise_q, false, rng);
          case ModelFamily::noisy_single:
            return run_noisy(g, seeds, thresholds, model.noise_q, true, rng);
        }
        throw std::logic_error("aggregate_seed_sets: unknown family");
      });
}

CausalScores aggregate_sweeps(const Graph& g, const ModelSpec& model, int sweeps,
                              const AggregateOptions& options) {
  if (sweeps < 1) throw std::invalid_argument("aggregate_sweeps: sweeps must be >= 1");
  const std::uint64_t total =
      static_cast<std::uint64_t>(sweeps) * static_cast<std::uint64_t>(g.node_count());
  return aggregate_runs(g, model, total, options).scores;
}

} // namespace ccflow
