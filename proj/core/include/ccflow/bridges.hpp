#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccflow/generators.hpp"
#include "ccflow/graph.hpp"
#include "ccflow/rng.hpp"

namespace ccflow {

/// Seeds every node of the source community and reports whether at least one
/// node of the other community activates under the per-node thresholds.
/// in_a[v] labels the communities (must partition the nodes).
bool can_spread(const Graph& g, std::span<const char> in_a, bool a_to_b,
                std::span<const std::uint32_t> thresholds);

enum class BridgeLabel : std::uint8_t { none, a_to_b, b_to_a, symmetric };

struct BridgeTrialParams {
  NodeId n = 100;  // nodes per community
  NodeId k = 6;
  double beta = 0.1;
  std::uint32_t threshold = 3;
  double closure_prob = 0.0;  // c: chance a new tie closes a cross triangle
  std::uint32_t max_ties = 150;
  /// With false (default) a closure candidate only needs a triangle on one
  /// side; true requires both endpoints to close one.
  bool strict_closure = false;
};

struct BridgeTrialResult {
  /// label_after[t] = spreadability classification once t+1 cross ties exist.
  std::vector<BridgeLabel> label_after;
  std::vector<char> tie_was_closure;
  std::optional<std::uint32_t> first_spread_at;  // tie count, 1-based
  BridgeLabel first_spread_label = BridgeLabel::none;
};

/// Builds two disconnected WS communities and adds cross ties one at a time:
/// with probability closure_prob a uniform candidate closing a triangle with
/// an existing cross tie, otherwise (or when no candidate exists) a uniform
/// untied cross pair. After every addition both spreading directions are
/// evaluated. Capability is checked to be monotone over the whole sequence.
BridgeTrialResult bridge_formation_trial(const BridgeTrialParams& params, Rng& rng);

/// Exact counts of ordered minimal-bridge pairs: symmetric pairs share one
/// edge, asymmetric pairs are disjoint. ratio = sym/asym = T^2/(nA*nB - T^2)
/// as a reduced exact rational, undefined when nA*nB <= T^2.
struct BridgeCount {
  std::uint32_t n_a = 0, n_b = 0, t = 0;
  std::uint64_t sym = 0;
  std::uint64_t asym = 0;
  bool ratio_defined = false;
  std::uint64_t ratio_num = 0, ratio_den = 0;
};

BridgeCount count_bridge_pairs(std::uint32_t n_a, std::uint32_t n_b, std::uint32_t t);

/// Brute-force enumeration of all ordered pairs of minimal bridges (a target
/// plus t distinct sources each way), classified by edge-set intersection
/// size. Verifies the intersection never exceeds one edge. Refuses when the
/// pair count exceeds max_pairs.
BridgeCount enumerate_bridge_pairs_oracle(std::uint32_t n_a, std::uint32_t n_b, std::uint32_t t,
                                          std::uint64_t max_pairs = 100'000'000);

struct IncidenceTailEstimate {
  double p_hat = 0.0;   // P(some vertex incident to >= t of 2t random ties)
  double bound = 0.0;   // 2n(t+1)(4/n)^t
  std::uint64_t trials = 0;
};

/// Monte Carlo estimate of the incidence tail: drop 2t cross ties with
/// uniform independent endpoints between communities of size n each.
IncidenceTailEstimate incidence_tail_estimate(std::uint32_t n, std::uint32_t t,
                                              std::uint64_t trials, Rng& rng);

struct BridgeCurvePoint {
  double closure_prob = 0.0;
  std::uint32_t ties_added = 0;
  std::uint64_t spreadable = 0;  // trials where >= 1 direction spreads
  std::uint64_t symmetric = 0;
  /// symmetric / spreadable; unset while nothing spreads.
  std::optional<double> p_symmetric;
};

struct BridgeExperimentResult {
  std::vector<BridgeCurvePoint> curve;  // per (c, tie count)
  struct FirstSpread {
    double closure_prob;
    std::uint64_t a_to_b = 0, b_to_a = 0, symmetric = 0;
  };
  std::vector<FirstSpread> first_spread;  // per c
  std::uint64_t trials = 0;
};

/// Runs `trials` independent bridge_formation_trial per closure probability,
/// aggregating the symmetry curve and the classification at first spread.
BridgeExperimentResult run_bridge_experiment(const BridgeTrialParams& base,
                                             std::span<const double> closure_probs,
                                             std::uint64_t trials, std::uint64_t seed,
                                             int threads);

} // namespace ccflow
