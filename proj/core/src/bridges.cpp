#include "ccflow/bridges.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "ccflow/contagion.hpp"

namespace ccflow {

bool can_spread(const Graph& g, std::span<const char> in_a, bool a_to_b,
                std::span<const std::uint32_t> thresholds) {
  if (in_a.size() != g.node_count())
    throw std::invalid_argument("can_spread: label size mismatch");
  SeedSet seeds;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (static_cast<bool>(in_a[v]) == a_to_b) seeds.members.push_back(v);
  }
  seeds.fraction = g.node_count()
                       ? static_cast<double>(seeds.members.size()) / g.node_count()
                       : 0.0;
  const CascadeRecord record = run_gi(g, seeds, thresholds);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (static_cast<bool>(in_a[v]) != a_to_b && record.active(v)) return true;
  }
  return false;
}

namespace {

using CrossTie = std::pair<NodeId, NodeId>;  // (node in A, node in B)

struct TrialState {
  const TwoCommunityGraph* base;
  std::vector<CrossTie> ties;
  std::set<CrossTie> tie_set;
  std::vector<std::vector<NodeId>> cross_of_a;  // per A node: tied B nodes
  std::vector<std::vector<NodeId>> cross_of_b;  // per B node: tied A nodes

  bool tied(NodeId a, NodeId b) const { return tie_set.count({a, b}) > 0; }

  void add(NodeId a, NodeId b) {
    ties.emplace_back(a, b);
    tie_set.insert({a, b});
    cross_of_a[a].push_back(b);
    cross_of_b[b - base->community_size].push_back(a);
  }

  Graph merged() const {
    GraphBuilder builder(base->graph.node_count());
    for (const auto& [u, v] : base->graph.edges()) builder.add_edge(u, v);
    for (const auto& [a, b] : ties) builder.add_edge(a, b);
    return builder.build();
  }
};

/// Candidates closing a triangle with an existing cross tie: (a, b) untied
/// such that a neighbor of a is tied to b, or a neighbor of b is tied to a.
std::vector<CrossTie> closure_candidates(const TrialState& state, bool strict) {
  const Graph& g = state.base->graph;
  std::set<CrossTie> found;
  for (const auto& [a0, b0] : state.ties) {
    for (const NodeId a : g.neighbors(a0)) {
      if (!state.tied(a, b0)) found.insert({a, b0});
    }
    for (const NodeId b : g.neighbors(b0)) {
      if (!state.tied(a0, b)) found.insert({a0, b});
    }
  }
  std::vector<CrossTie> candidates;
  candidates.reserve(found.size());
  for (const auto& [a, b] : found) {
    if (strict) {
      bool via_a = false, via_b = false;
      for (const NodeId x : g.neighbors(a)) {
        if (state.tied(x, b)) {
          via_a = true;
          break;
        }
      }
      for (const NodeId y : g.neighbors(b)) {
        if (state.tied(a, y)) {
          via_b = true;
          break;
        }
      }
      if (!(via_a && via_b)) continue;
    }
    candidates.emplace_back(a, b);
  }
  return candidates;
}

CrossTie random_untied_pair(const TrialState& state, NodeId n, Rng& rng) {
  // Untied pairs always exist (max_ties <= n*n is validated up front).
  for (;;) {
    const NodeId a = static_cast<NodeId>(rng.below(n));
    const NodeId b = static_cast<NodeId>(n + rng.below(n));
    if (!state.tied(a, b)) return {a, b};
  }
}

} // namespace

BridgeTrialResult bridge_formation_trial(const BridgeTrialParams& params, Rng& rng) {
  if (params.closure_prob < 0.0 || params.closure_prob > 1.0)
    throw std::invalid_argument("bridge_formation_trial: closure_prob must be in [0, 1]");
  if (static_cast<std::uint64_t>(params.max_ties) >
      static_cast<std::uint64_t>(params.n) * params.n)
    throw std::invalid_argument("bridge_formation_trial: max_ties exceeds possible cross pairs");

  const TwoCommunityGraph base =
      two_disconnected_ws(params.n, params.k, params.beta, rng.next_u64());
  TrialState state;
  state.base = &base;
  state.cross_of_a.resize(params.n);
  state.cross_of_b.resize(params.n);

  std::vector<char> in_a(base.graph.node_count());
  for (NodeId v = 0; v < base.graph.node_count(); ++v) in_a[v] = base.in_a(v) ? 1 : 0;
  const std::vector<std::uint32_t> threshold_per_node(
      base.graph.node_count(), params.threshold);

  BridgeTrialResult result;
  result.label_after.reserve(params.max_ties);
  result.tie_was_closure.reserve(params.max_ties);

  bool ab = false, ba = false;
  for (std::uint32_t tie = 0; tie < params.max_ties; ++tie) {
    bool closure = false;
    CrossTie next;
    if (rng.bernoulli(params.closure_prob)) {
      const auto candidates = closure_candidates(state, params.strict_closure);
      if (!candidates.empty()) {
        next = candidates[rng.below(candidates.size())];
        closure = true;
      }
    }
    if (!closure) next = random_untied_pair(state, params.n, rng);
    state.add(next.first, next.second);
    result.tie_was_closure.push_back(closure ? 1 : 0);

    const Graph merged = state.merged();
    const bool now_ab = can_spread(merged, in_a, true, threshold_per_node);
    const bool now_ba = can_spread(merged, in_a, false, threshold_per_node);
    if ((ab && !now_ab) || (ba && !now_ba))
      throw std::logic_error("bridge_formation_trial: spreading capability regressed");
    ab = now_ab;
    ba = now_ba;

    BridgeLabel label = BridgeLabel::none;
    if (ab && ba) {
      label = BridgeLabel::symmetric;
    } else if (ab) {
      label = BridgeLabel::a_to_b;
    } else if (ba) {
      label = BridgeLabel::b_to_a;
    }
    result.label_after.push_back(label);
    if (!result.first_spread_at && label != BridgeLabel::none) {
      result.first_spread_at = tie + 1;
      result.first_spread_label = label;
    }
  }
  return result;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t to_u64(u128 value, const char* what) {
  if (value > static_cast<u128>(UINT64_MAX)) throw std::overflow_error(what);
  return static_cast<std::uint64_t>(value);
}

u128 binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

} // namespace

BridgeCount count_bridge_pairs(std::uint32_t n_a, std::uint32_t n_b, std::uint32_t t) {
  if (t < 1 || n_a < t || n_b < t)
    throw std::invalid_argument("count_bridge_pairs: need n_a >= t >= 1 and n_b >= t");
  BridgeCount count;
  count.n_a = n_a;
  count.n_b = n_b;
  count.t = t;

  const u128 pairs = static_cast<u128>(n_a) * n_b;
  const u128 sym = pairs * binomial(n_a - 1, t - 1) * binomial(n_b - 1, t - 1);
  const u128 total = pairs * binomial(n_a, t) * binomial(n_b, t);
  count.sym = to_u64(sym, "count_bridge_pairs: sym overflows 64 bits");
  count.asym = to_u64(total - sym, "count_bridge_pairs: asym overflows 64 bits");

  const std::uint64_t t2 = static_cast<std::uint64_t>(t) * t;
  const std::uint64_t product = static_cast<std::uint64_t>(n_a) * n_b;
  if (product > t2) {
    const std::uint64_t g = std::gcd(t2, product - t2);
    count.ratio_defined = true;
    count.ratio_num = t2 / g;
    count.ratio_den = (product - t2) / g;
  }
  return count;
}

BridgeCount enumerate_bridge_pairs_oracle(std::uint32_t n_a, std::uint32_t n_b,
                                          std::uint32_t t, std::uint64_t max_pairs) {
  if (t < 1 || n_a < t || n_b < t)
    throw std::invalid_argument("enumerate_bridge_pairs_oracle: need n_a >= t >= 1 and n_b >= t");
  if (n_a > 30 || n_b > 30)
    throw std::invalid_argument("enumerate_bridge_pairs_oracle: community sizes above 30 unsupported");

  const u128 forward = static_cast<u128>(n_b) * binomial(n_a, t);
  const u128 backward = static_cast<u128>(n_a) * binomial(n_b, t);
  if (forward * backward > max_pairs)
    throw std::runtime_error("enumerate_bridge_pairs_oracle: pair count exceeds the size bound");

  const auto subsets_of_size = [](std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (static_cast<std::uint32_t>(std::popcount(m)) == k) masks.push_back(m);
    }
    return masks;
  };
  const auto sources_a = subsets_of_size(n_a, t);
  const auto sources_b = subsets_of_size(n_b, t);

  BridgeCount count;
  count.n_a = n_a;
  count.n_b = n_b;
  count.t = t;

  // Materialize each bridge as an explicit cross-edge set and classify every
  // ordered pair by literal edge-set intersection.
  const auto edges_of_forward = [&](std::uint32_t b, std::uint32_t sa) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t a = 0; a < n_a; ++a) {
      if ((sa >> a) & 1u) edges.emplace_back(a, b);
    }
    return edges;
  };
  const auto edges_of_backward = [&](std::uint32_t a, std::uint32_t sb) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t b = 0; b < n_b; ++b) {
      if ((sb >> b) & 1u) edges.emplace_back(a, b);
    }
    return edges;
  };

  std::uint64_t sym = 0, asym = 0;
  for (std::uint32_t b = 0; b < n_b; ++b) {
    for (const std::uint32_t sa : sources_a) {
      const auto forward_edges = edges_of_forward(b, sa);
      for (std::uint32_t a = 0; a < n_a; ++a) {
        for (const std::uint32_t sb : sources_b) {
          const auto backward_edges = edges_of_backward(a, sb);
          std::size_t overlap = 0;
          for (const auto& e1 : forward_edges) {
            for (const auto& e2 : backward_edges) {
              overlap += (e1 == e2);
            }
          }
          if (overlap > 1)
            throw std::logic_error("enumerate_bridge_pairs_oracle: overlap exceeds one edge");
          if (overlap == 1) {
            ++sym;
          } else {
            ++asym;
          }
        }
      }
    }
  }
  count.sym = sym;
  count.asym = asym;

  const std::uint64_t t2 = static_cast<std::uint64_t>(t) * t;
  const std::uint64_t product = static_cast<std::uint64_t>(n_a) * n_b;
  if (product > t2 && asym > 0) {
    const std::uint64_t g = std::gcd(sym, asym);
    count.ratio_defined = true;
    count.ratio_num = sym / g;
    count.ratio_den = asym / g;
  }
  return count;
}

IncidenceTailEstimate incidence_tail_estimate(std::uint32_t n, std::uint32_t t,
                                              std::uint64_t trials, Rng& rng) {
  if (n == 0 || t < 1) throw std::invalid_argument("incidence_tail_estimate: bad parameters");
  IncidenceTailEstimate estimate;
  estimate.trials = trials;
  estimate.bound = 2.0 * n * (t + 1.0) * std::pow(4.0 / n, static_cast<double>(t));

  std::vector<std::uint32_t> count_a(n), count_b(n);
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::fill(count_a.begin(), count_a.end(), 0);
    std::fill(count_b.begin(), count_b.end(), 0);
    bool hit = false;
    for (std::uint32_t tie = 0; tie < 2 * t && !hit; ++tie) {
      const auto a = static_cast<std::uint32_t>(rng.below(n));
      const auto b = static_cast<std::uint32_t>(rng.below(n));
      hit = (++count_a[a] >= t) || (++count_b[b] >= t);
    }
    hits += hit;
  }
  estimate.p_hat = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  return estimate;
}

BridgeExperimentResult run_bridge_experiment(const BridgeTrialParams& base,
                                             std::span<const double> closure_probs,
                                             std::uint64_t trials, std::uint64_t seed,
                                             int threads) {
  BridgeExperimentResult result;
  result.trials = trials;

  struct Tally {
    std::vector<std::uint64_t> spreadable;
    std::vector<std::uint64_t> symmetric;
    std::uint64_t first_ab = 0, first_ba = 0, first_sym = 0;
  };

  for (std::size_t ci = 0; ci < closure_probs.size(); ++ci) {
    BridgeTrialParams params = base;
    params.closure_prob = closure_probs[ci];

    const int worker_count = std::max(1, std::min<int>(threads, static_cast<int>(trials ? trials : 1)));
    std::vector<Tally> tallies(worker_count);
    for (auto& tally : tallies) {
      tally.spreadable.assign(params.max_ties, 0);
      tally.symmetric.assign(params.max_ties, 0);
    }

    const auto work = [&](int w) {
      Tally& tally = tallies[w];
      for (std::uint64_t trial = w; trial < trials; trial += worker_count) {
        Rng rng(derive_seed(seed, ci * trials + trial));
        const BridgeTrialResult r = bridge_formation_trial(params, rng);
        for (std::uint32_t tc = 0; tc < params.max_ties; ++tc) {
          const BridgeLabel label = r.label_after[tc];
          tally.spreadable[tc] += (label != BridgeLabel::none);
          tally.symmetric[tc] += (label == BridgeLabel::symmetric);
        }
        switch (r.first_spread_label) {
          case BridgeLabel::a_to_b: ++tally.first_ab; break;
          case BridgeLabel::b_to_a: ++tally.first_ba; break;
          case BridgeLabel::symmetric: ++tally.first_sym; break;
          case BridgeLabel::none: break;
        }
      }
    };
    if (worker_count == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < worker_count; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }

    Tally total;
    total.spreadable.assign(params.max_ties, 0);
    total.symmetric.assign(params.max_ties, 0);
    for (const auto& tally : tallies) {
      for (std::uint32_t tc = 0; tc < params.max_ties; ++tc) {
        total.spreadable[tc] += tally.spreadable[tc];
        total.symmetric[tc] += tally.symmetric[tc];
      }
      total.first_ab += tally.first_ab;
      total.first_ba += tally.first_ba;
      total.first_sym += tally.first_sym;
    }

    for (std::uint32_t tc = 0; tc < params.max_ties; ++tc) {
      BridgeCurvePoint point;
      point.closure_prob = params.closure_prob;
      point.ties_added = tc + 1;
      point.spreadable = total.spreadable[tc];
      point.symmetric = total.symmetric[tc];
      if (point.spreadable > 0)
        point.p_symmetric = static_cast<double>(point.symmetric) /
                            static_cast<double>(point.spreadable);
      result.curve.push_back(point);
    }
    result.first_spread.push_back(
        {params.closure_prob, total.first_ab, total.first_ba, total.first_sym});
  }
  return result;
}

} // namespace ccflow
