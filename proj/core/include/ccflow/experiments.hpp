#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccflow/causal.hpp"
#include "ccflow/contagion.hpp"
#include "ccflow/graph.hpp"
#include "ccflow/metrics.hpp"
#include "ccflow/stats.hpp"

namespace ccflow {

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// Model, seeding and Monte Carlo effort shared by every scenario of an
/// experiment. Scenario seeds derive from `seed` by graph index only, so
/// threshold variants of one graph reuse the same seed-set schedule.
struct SweepProtocol {
  ModelSpec model;
  SeedMode seed_mode = SeedMode::clustered;
  double seed_fraction = 0.05;
  int sweeps = 2;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Threshold sweep values. For gi/noisy families a value is the threshold
/// (absolute T or relative theta, per mode); for ltm it is phi and for icm
/// the transmission probability, where mode is ignored.
struct ThresholdSweep {
  ThresholdMode mode = ThresholdMode::absolute;
  NeighborhoodMode neighborhood = NeighborhoodMode::closed;
  std::vector<double> values;
};

/// Applies one sweep value to the model knob the family actually sweeps.
void apply_sweep_value(ModelSpec& model, const ThresholdSweep& sweep, double value);

struct ScenarioOutcome {
  CausalScores scores;  // normalized
  double mean_density = 0.0;
  double full_activation_fraction = 0.0;
  std::uint64_t runs = 0;
};

/// sweeps * |V| cascades under the protocol with the given model; the
/// scenario's root seed must already be graph-specific.
ScenarioOutcome run_scenario(const Graph& g, const ModelSpec& model,
                             const SweepProtocol& protocol, std::uint64_t scenario_seed);

// ---------------------------------------------------------------- symmetry

struct SymmetrySweepParams {
  SweepProtocol protocol;
  ThresholdSweep sweep;
  /// Scenario inclusion: mean spreading density must exceed this (0 = off).
  double density_filter = 0.0;
  /// Use the zero-pair-excluded variant for the pooled statistic.
  bool pool_excluded_variant = false;
};

struct SymmetrySweepRow {
  std::string graph_id;
  double threshold = 0.0;
  SymmetryReport xi_incl;  // never-traversed edges included as (0, 0)
  SymmetryReport xi_excl;  // those edges dropped
  double mean_density = 0.0;
  bool included = true;
};

struct SymmetrySweepResult {
  std::vector<SymmetrySweepRow> rows;
  /// pearson(threshold, Xi_s) over included rows with defined Xi_s.
  std::optional<CorrelationTest> pooled;
};

SymmetrySweepResult symmetry_vs_threshold(std::span<const NamedGraph> graphs,
                                          const SymmetrySweepParams& params);

// ---------------------------------------------------------------- tie range

struct TieRangeParams {
  SweepProtocol protocol;
  ThresholdSweep sweep;  // typically a single value (the paper uses T = 2)
  int ti_bins = 10;      // linear bins over max_ti in [0, 1]
};

struct TieRangeEdgeRecord {
  std::string graph_id;
  double threshold = 0.0;
  NodeId u = 0, v = 0;
  std::uint32_t range = 0;
  double max_ti = 0.0;  // max of the two normalized directions
  double delta = 0.0;   // |TI(u,v) - TI(v,u)|, normalized
};

struct TieRangeCell {
  std::uint32_t range = 0;
  int ti_bin = 0;
  double mean_delta = 0.0;
  std::size_t count = 0;
};

struct TieRangeResult {
  std::vector<TieRangeEdgeRecord> edges;  // finite-range edges only
  std::vector<TieRangeCell> cells;
  std::size_t infinite_range_edges = 0;
};

TieRangeResult tie_range_asymmetry(std::span<const NamedGraph> graphs,
                                   const TieRangeParams& params);

// ------------------------------------------------------------ tie strength

struct TieStrengthParams {
  SweepProtocol protocol;
  ThresholdSweep sweep;
  /// Undirected tie importance: max of the two directions (default) or sum.
  bool use_sum = false;
};

struct TieStrengthRow {
  std::string graph_id;
  double threshold = 0.0;
  int tercile = 0;  // 0 weak / 1 medium / 2 strong
  MeanSe importance;
};

struct TieStrengthResult {
  std::vector<TieStrengthRow> rows;
  std::array<MeanSe, 3> pooled{};  // edge values pooled across scenarios
  std::size_t undefined_edges = 0;
};

TieStrengthResult tie_strength_importance(std::span<const NamedGraph> graphs,
                                          const TieStrengthParams& params);

// --------------------------------------------------------------- periphery

struct PeripheryScenario {
  ThresholdMode mode = ThresholdMode::absolute;
  double value = 1.0;
};

struct PeripheryParams {
  SweepProtocol protocol;
  NeighborhoodMode neighborhood = NeighborhoodMode::closed;
  std::vector<PeripheryScenario> scenarios;
  bool full_activation_only = false;
};

struct PeripheryRow {
  std::string graph_id;
  ThresholdMode mode = ThresholdMode::absolute;
  double value = 0.0;
  FlowAlignment alignment;
  double mean_density = 0.0;
  double full_activation_fraction = 0.0;
  bool included = true;
};

struct PeripheryResult {
  std::vector<PeripheryRow> rows;
};

PeripheryResult periphery_core_sweep(std::span<const NamedGraph> graphs,
                                     const PeripheryParams& params);

// ------------------------------------------------------------ rewiring dip

struct RewiringDipParams {
  NodeId n = 200;
  NodeId k = 8;
  std::vector<double> betas;
  int graphs_per_beta = 1;
  SweepProtocol protocol;  // seed_mode random, small fractions per the setup
  ThresholdSpec threshold;
};

struct RewiringDipRow {
  double beta = 0.0;
  double mean_density = 0.0;
  double mean_xi = 0.0;       // over graphs with defined Xi_s
  std::size_t n_graphs = 0;
  std::size_t n_defined = 0;
};

struct RewiringDipResult {
  std::vector<RewiringDipRow> rows;
};

RewiringDipResult rewiring_dip(const RewiringDipParams& params);

// ------------------------------------------------------------- convergence

struct ConvergenceParams {
  SweepProtocol protocol;
  ThresholdSpec threshold;
  std::vector<int> sweep_counts;
  double epsilon = 1e-9;  // relative-difference denominator floor
};

struct ConvergenceRow {
  std::string graph_id;
  int sweeps = 0;
  std::optional<double> ni_corr;  // pearson of per-node raw NI across two runs
  std::optional<double> ti_corr;  // pearson of per-direction raw TI
  SymmetryReport xi_a, xi_b;
  std::optional<double> rel_diff_pct;  // |xi_a - xi_b| / max(|xi_a|, eps) * 100
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
};

ConvergenceResult convergence_diagnostics(std::span<const NamedGraph> graphs,
                                          const ConvergenceParams& params);

} // namespace ccflow
