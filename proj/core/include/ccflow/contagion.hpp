#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccflow/graph.hpp"
#include "ccflow/rng.hpp"
#include "ccflow/seeding.hpp"

namespace ccflow {

enum class ThresholdMode : std::uint8_t { absolute, relative };

/// Denominator convention for relative thresholds: closed counts the node
/// itself (|N[i]| = degree + 1), open counts neighbors only. The activation
/// sum always runs over neighbors.
enum class NeighborhoodMode : std::uint8_t { closed, open };

struct ThresholdSpec {
  ThresholdMode mode = ThresholdMode::absolute;
  double value = 2.0;  // T >= 1 (absolute) or theta in (0, 1] (relative)
  NeighborhoodMode neighborhood = NeighborhoodMode::closed;
};

/// Per-node integer thresholds, always >= 1. Relative mode resolves
/// ceil(theta * |N[i]|).
std::vector<std::uint32_t> resolve_thresholds(const Graph& g, const ThresholdSpec& spec);

/// One converged cascade. Activation is monotone; tau = -1 means the node
/// never activated, tau = 0 exactly the seed set. converged_at is the last
/// step at which any node activated (one more synchronous step changes
/// nothing).
struct CascadeRecord {
  std::vector<std::int32_t> activation_time;
  SeedSet seeds;
  std::int32_t converged_at = 0;

  bool active(NodeId v) const { return activation_time[v] >= 0; }
  std::size_t active_count() const {
    std::size_t c = 0;
    for (const auto t : activation_time) c += (t >= 0);
    return c;
  }
};

/// Deterministic threshold dynamics: an inactive node activates at t+1 when
/// at least T_i of its neighbors are active at t; synchronous steps until no
/// change.
CascadeRecord run_gi(const Graph& g, const SeedSet& seeds,
                     std::span<const std::uint32_t> thresholds);

struct LtmConfig {
  enum class Weights : std::uint8_t { homogeneous, gaussian };
  Weights weights = Weights::homogeneous;
  double sigma = 0.05;  // gaussian spread around 1/deg, truncated at 0
  double phi = 0.5;     // activation level for the per-node weight sum
};

/// Linear threshold dynamics: incoming weights drawn once per run
/// (homogeneous 1/deg or Gaussian(1/deg, sigma) truncated at 0, renormalized
/// per node to sum 1); node i activates when the weight of its active
/// neighbors reaches phi.
CascadeRecord run_ltm(const Graph& g, const SeedSet& seeds, const LtmConfig& config, Rng& rng);

/// Independent cascade: every newly activated node gets one Bernoulli(beta)
/// attempt per neighbor that was inactive at the start of the following step.
CascadeRecord run_icm(const Graph& g, const SeedSet& seeds, double beta, Rng& rng);

/// Threshold dynamics with subthreshold noise: per step, an inactive node
/// with at least one active neighbor activates deterministically at or above
/// threshold, otherwise with probability q. With single_transmission the
/// subthreshold draw happens only on the first step at which the node has an
/// active neighbor.
CascadeRecord run_noisy(const Graph& g, const SeedSet& seeds,
                        std::span<const std::uint32_t> thresholds, double q,
                        bool single_transmission, Rng& rng);

/// Fraction of nodes active at convergence.
double spreading_density(const CascadeRecord& record, const Graph& g);

enum class ModelFamily : std::uint8_t { gi, ltm, icm, noisy, noisy_single };

struct ModelSpec {
  ModelFamily family = ModelFamily::gi;
  ThresholdSpec threshold;  // gi / noisy / noisy_single
  LtmConfig ltm;
  double icm_beta = 0.1;
  double noise_q = 0.1;
};

/// Runs the configured family. Thresholds are resolved per call; prefer
/// run_gi / run_noisy directly with pre-resolved thresholds in hot loops.
CascadeRecord run_model(const Graph& g, const ModelSpec& spec, const SeedSet& seeds, Rng& rng);

std::string to_string(ModelFamily family);

} // namespace ccflow
