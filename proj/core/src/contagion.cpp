#include "ccflow/contagion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccflow {

std::vector<std::uint32_t> resolve_thresholds(const Graph& g, const ThresholdSpec& spec) {
  const NodeId n = g.node_count();
  std::vector<std::uint32_t> thresholds(n);
  if (spec.mode == ThresholdMode::absolute) {
    if (spec.value < 1.0 || spec.value != std::floor(spec.value))
      throw std::invalid_argument("absolute threshold must be a positive integer");
    std::fill(thresholds.begin(), thresholds.end(), static_cast<std::uint32_t>(spec.value));
    return thresholds;
  }
  if (spec.value <= 0.0 || spec.value > 1.0)
    throw std::invalid_argument("relative threshold must be in (0, 1]");
  const std::uint32_t self = spec.neighborhood == NeighborhoodMode::closed ? 1 : 0;
  for (NodeId v = 0; v < n; ++v) {
    const double size = static_cast<double>(g.degree(v) + self);
    // ceil with a dust guard so exact products (0.2 * 5) stay exact.
    const auto t = static_cast<std::int64_t>(std::ceil(spec.value * size - 1e-9));
    thresholds[v] = static_cast<std::uint32_t>(std::max<std::int64_t>(t, 1));
  }
  return thresholds;
}

namespace {

CascadeRecord make_record(const Graph& g, const SeedSet& seeds) {
  CascadeRecord record;
  record.activation_time.assign(g.node_count(), -1);
  record.seeds = seeds;
  for (const NodeId s : seeds.members) {
    if (s >= g.node_count()) throw std::invalid_argument("seed node out of range");
    record.activation_time[s] = 0;
  }
  return record;
}

} // namespace

CascadeRecord run_gi(const Graph& g, const SeedSet& seeds,
                     std::span<const std::uint32_t> thresholds) {
  CascadeRecord record = make_record(g, seeds);
  std::vector<std::uint32_t> active_neighbors(g.node_count(), 0);
  std::vector<NodeId> frontier = seeds.members;
  std::vector<NodeId> next;

  std::int32_t t = 0;
  while (!frontier.empty()) {
    next.clear();
    for (const NodeId u : frontier) {
      for (const NodeId v : g.neighbors(u)) {
        if (record.activation_time[v] >= 0) continue;
        if (++active_neighbors[v] == thresholds[v]) next.push_back(v);
      }
    }
    ++t;
    for (const NodeId v : next) record.activation_time[v] = t;
    if (!next.empty()) record.converged_at = t;
    frontier.swap(next);
  }
  return record;
}

CascadeRecord run_ltm(const Graph& g, const SeedSet& seeds, const LtmConfig& config, Rng& rng) {
  if (config.phi <= 0.0 || config.phi > 1.0)
    throw std::invalid_argument("run_ltm: phi must be in (0, 1]");
  if (config.sigma < 0.0) throw std::invalid_argument("run_ltm: sigma must be >= 0");
  const NodeId n = g.node_count();

  // weight[slot(e, u)] is u's influence on the opposite endpoint. Gaussian
  // draws happen in node-major adjacency order so runs reproduce.
  std::vector<double> weight(g.directed_slot_count(), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const NodeId deg = g.degree(v);
    if (deg == 0) continue;
    const double base = 1.0 / static_cast<double>(deg);
    const auto nbrs = g.neighbors(v);
    const auto eids = g.incident_edge_ids(v);
    if (config.weights == LtmConfig::Weights::homogeneous) {
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        weight[g.directed_slot(eids[i], nbrs[i])] = base;
      continue;
    }
    double sum = 0.0;
    std::vector<double> draws(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      draws[i] = std::max(0.0, rng.normal(base, config.sigma));
      sum += draws[i];
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const double w = sum > 0.0 ? draws[i] / sum : base;
      weight[g.directed_slot(eids[i], nbrs[i])] = w;
    }
  }

  CascadeRecord record = make_record(g, seeds);
  std::vector<double> influence(n, 0.0);
  std::vector<NodeId> frontier = seeds.members;
  std::vector<NodeId> next;
  // Slack keeps exact-sum activations (e.g. all neighbors active at phi = 1)
  // from being lost to accumulation error.
  const double phi = config.phi - 1e-9;

  std::int32_t t = 0;
  while (!frontier.empty()) {
    next.clear();
    for (const NodeId u : frontier) {
      const auto nbrs = g.neighbors(u);
      const auto eids = g.incident_edge_ids(u);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const NodeId v = nbrs[i];
        if (record.activation_time[v] >= 0) continue;
        const double before = influence[v];
        influence[v] += weight[g.directed_slot(eids[i], u)];
        if (before < phi && influence[v] >= phi) next.push_back(v);
      }
    }
    ++t;
    for (const NodeId v : next) record.activation_time[v] = t;
    if (!next.empty()) record.converged_at = t;
    frontier.swap(next);
  }
  return record;
}

CascadeRecord run_icm(const Graph& g, const SeedSet& seeds, double beta, Rng& rng) {
  if (beta < 0.0 || beta > 1.0) throw std::invalid_argument("run_icm: beta must be in [0, 1]");
  CascadeRecord record = make_record(g, seeds);
  std::vector<NodeId> frontier = seeds.members;
  std::vector<NodeId> next;
  std::vector<char> pending(g.node_count(), 0);

  std::int32_t t = 0;
  while (!frontier.empty()) {
    next.clear();
    // Frontier is kept sorted so the draw sequence is well-defined. Every
    // neighbor inactive at the start of the step receives one attempt from
    // each newly active node.
    for (const NodeId u : frontier) {
      for (const NodeId v : g.neighbors(u)) {
        if (record.activation_time[v] >= 0) continue;
        if (rng.bernoulli(beta) && !pending[v]) {
          pending[v] = 1;
          next.push_back(v);
        }
      }
    }
    ++t;
    std::sort(next.begin(), next.end());
    for (const NodeId v : next) {
      record.activation_time[v] = t;
      pending[v] = 0;
    }
    if (!next.empty()) record.converged_at = t;
    frontier.swap(next);
  }
  return record;
}

CascadeRecord run_noisy(const Graph& g, const SeedSet& seeds,
                        std::span<const std::uint32_t> thresholds, double q,
                        bool single_transmission, Rng& rng) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("run_noisy: q must be in [0, 1]");
  const NodeId n = g.node_count();
  CascadeRecord record = make_record(g, seeds);
  std::vector<std::uint32_t> active_neighbors(n, 0);
  std::vector<char> attempted(n, 0);
  std::vector<NodeId> newly_active = seeds.members;
  std::vector<NodeId> next;

  std::int32_t t = 0;
  while (!newly_active.empty()) {
    for (const NodeId u : newly_active) {
      for (const NodeId v : g.neighbors(u)) {
        if (record.activation_time[v] < 0) ++active_neighbors[v];
      }
    }
    next.clear();
    // A step with no activation is convergence, even though with q > 0 a
    // later retry could still have fired.
    for (NodeId v = 0; v < n; ++v) {
      if (record.activation_time[v] >= 0 || active_neighbors[v] == 0) continue;
      if (active_neighbors[v] >= thresholds[v]) {
        next.push_back(v);
      } else if (!single_transmission || !attempted[v]) {
        attempted[v] = 1;
        if (rng.bernoulli(q)) next.push_back(v);
      }
    }
    ++t;
    for (const NodeId v : next) record.activation_time[v] = t;
    if (!next.empty()) record.converged_at = t;
    newly_active.swap(next);
  }
  return record;
}

double spreading_density(const CascadeRecord& record, const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  return static_cast<double>(record.active_count()) / static_cast<double>(g.node_count());
}

CascadeRecord run_model(const Graph& g, const ModelSpec& spec, const SeedSet& seeds, Rng& rng) {
  switch (spec.family) {
    case ModelFamily::gi:
      return run_gi(g, seeds, resolve_thresholds(g, spec.threshold));
    case ModelFamily::ltm:
      return run_ltm(g, seeds, spec.ltm, rng);
    case ModelFamily::icm:
      return run_icm(g, seeds, spec.icm_beta, rng);
    case ModelFamily::noisy:
      return run_noisy(g, seeds, resolve_thresholds(g, spec.threshold), spec.noise_q, false, rng);
    case ModelFamily::noisy_single:
      return run_noisy(g, seeds, resolve_thresholds(g, spec.threshold), spec.noise_q, true, rng);
  }
  throw std::logic_error("run_model: unknown family");
}

std::string to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::gi: return "gi";
    case ModelFamily::ltm: return "ltm";
    case ModelFamily::icm: return "icm";
    case ModelFamily::noisy: return "noisy";
    case ModelFamily::noisy_single: return "noisy-single";
  }
  return "?";
}

} // namespace ccflow
