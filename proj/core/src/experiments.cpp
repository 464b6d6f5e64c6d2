#include "ccflow/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ccflow/generators.hpp"
#include "ccflow/graph_analysis.hpp"

namespace ccflow {

void apply_sweep_value(ModelSpec& model, const ThresholdSweep& sweep, double value) {
  switch (model.family) {
    case ModelFamily::gi:
    case ModelFamily::noisy:
    case ModelFamily::noisy_single:
      model.threshold.mode = sweep.mode;
      model.threshold.value = value;
      model.threshold.neighborhood = sweep.neighborhood;
      break;
    case ModelFamily::ltm:
      model.ltm.phi = value;
      break;
    case ModelFamily::icm:
      model.icm_beta = value;
      break;
  }
}

ScenarioOutcome run_scenario(const Graph& g, const ModelSpec& model,
                             const SweepProtocol& protocol, std::uint64_t scenario_seed) {
  AggregateOptions options;
  options.seed_mode = protocol.seed_mode;
  options.seed_fraction = protocol.seed_fraction;
  options.seed = scenario_seed;
  options.threads = protocol.threads;
  const std::uint64_t total =
      static_cast<std::uint64_t>(std::max(protocol.sweeps, 1)) * g.node_count();
  AggregateResult aggregate = aggregate_runs(g, model, total, options);

  ScenarioOutcome outcome;
  outcome.mean_density = aggregate.mean_density();
  outcome.full_activation_fraction = aggregate.full_activation_fraction();
  outcome.runs = aggregate.runs;
  outcome.scores = std::move(aggregate.scores);
  return outcome;
}

SymmetrySweepResult symmetry_vs_threshold(std::span<const NamedGraph> graphs,
                                          const SymmetrySweepParams& params) {
  SymmetrySweepResult result;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const std::uint64_t graph_seed = derive_seed(params.protocol.seed, gi);
    for (const double value : params.sweep.values) {
      ModelSpec model = params.protocol.model;
      apply_sweep_value(model, params.sweep, value);
      const ScenarioOutcome outcome =
          run_scenario(graphs[gi].graph, model, params.protocol, graph_seed);

      SymmetrySweepRow row;
      row.graph_id = graphs[gi].id;
      row.threshold = value;
      row.xi_incl = flow_symmetry(outcome.scores, graphs[gi].graph, true);
      row.xi_excl = flow_symmetry(outcome.scores, graphs[gi].graph, false);
      row.mean_density = outcome.mean_density;
      row.included = params.density_filter <= 0.0 || outcome.mean_density > params.density_filter;
      result.rows.push_back(std::move(row));
    }
  }

  std::vector<double> xs, ys;
  for (const auto& row : result.rows) {
    const SymmetryReport& report = params.pool_excluded_variant ? row.xi_excl : row.xi_incl;
    if (row.included && report.defined) {
      xs.push_back(row.threshold);
      ys.push_back(report.xi_s);
    }
  }
  result.pooled = pearson_test(xs, ys);
  return result;
}

TieRangeResult tie_range_asymmetry(std::span<const NamedGraph> graphs,
                                   const TieRangeParams& params) {
  if (params.ti_bins < 1) throw std::invalid_argument("tie_range_asymmetry: ti_bins must be >= 1");
  TieRangeResult result;

  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi].graph;
    const std::uint64_t graph_seed = derive_seed(params.protocol.seed, gi);
    for (const double value : params.sweep.values) {
      ModelSpec model = params.protocol.model;
      apply_sweep_value(model, params.sweep, value);
      const ScenarioOutcome outcome = run_scenario(g, model, params.protocol, graph_seed);

      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge_endpoints(e);
        const auto range = tie_range(g, u, v);
        if (!range) {
          ++result.infinite_range_edges;
          continue;
        }
        const double f = outcome.scores.ti_norm[2 * static_cast<std::size_t>(e)];
        const double b = outcome.scores.ti_norm[2 * static_cast<std::size_t>(e) + 1];
        TieRangeEdgeRecord record;
        record.graph_id = graphs[gi].id;
        record.threshold = value;
        record.u = u;
        record.v = v;
        record.range = *range;
        record.max_ti = std::max(f, b);
        record.delta = std::fabs(f - b);
        result.edges.push_back(std::move(record));
      }
    }
  }

  std::map<std::pair<std::uint32_t, int>, std::pair<double, std::size_t>> cells;
  for (const auto& record : result.edges) {
    int bin = static_cast<int>(record.max_ti * params.ti_bins);
    bin = std::clamp(bin, 0, params.ti_bins - 1);
    auto& [sum, count] = cells[{record.range, bin}];
    sum += record.delta;
    ++count;
  }
  for (const auto& [key, value] : cells) {
    result.cells.push_back(
        {key.first, key.second, value.first / static_cast<double>(value.second), value.second});
  }
  return result;
}

TieStrengthResult tie_strength_importance(std::span<const NamedGraph> graphs,
                                          const TieStrengthParams& params) {
  TieStrengthResult result;
  std::array<std::vector<double>, 3> pooled_values;

  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi].graph;
    const TieTerciles terciles = tie_strength_terciles(g);
    result.undefined_edges += terciles.undefined_edges;
    const std::uint64_t graph_seed = derive_seed(params.protocol.seed, gi);

    for (const double value : params.sweep.values) {
      ModelSpec model = params.protocol.model;
      apply_sweep_value(model, params.sweep, value);
      const ScenarioOutcome outcome = run_scenario(g, model, params.protocol, graph_seed);

      std::array<std::vector<double>, 3> groups;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto cls = terciles.edge_class[e];
        if (cls < 0) continue;
        const double f = outcome.scores.ti_norm[2 * static_cast<std::size_t>(e)];
        const double b = outcome.scores.ti_norm[2 * static_cast<std::size_t>(e) + 1];
        const double importance = params.use_sum ? f + b : std::max(f, b);
        groups[static_cast<std::size_t>(cls)].push_back(importance);
        pooled_values[static_cast<std::size_t>(cls)].push_back(importance);
      }
      for (int tercile = 0; tercile < 3; ++tercile) {
        TieStrengthRow row;
        row.graph_id = graphs[gi].id;
        row.threshold = value;
        row.tercile = tercile;
        row.importance = mean_with_se(groups[tercile]);
        result.rows.push_back(std::move(row));
      }
    }
  }
  for (int tercile = 0; tercile < 3; ++tercile)
    result.pooled[tercile] = mean_with_se(pooled_values[tercile]);
  return result;
}

PeripheryResult periphery_core_sweep(std::span<const NamedGraph> graphs,
                                     const PeripheryParams& params) {
  PeripheryResult result;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi].graph;
    const std::uint64_t graph_seed = derive_seed(params.protocol.seed, gi);
    for (const PeripheryScenario& scenario : params.scenarios) {
      ModelSpec model = params.protocol.model;
      model.threshold.mode = scenario.mode;
      model.threshold.value = scenario.value;
      model.threshold.neighborhood = params.neighborhood;
      const ScenarioOutcome outcome = run_scenario(g, model, params.protocol, graph_seed);

      PeripheryRow row;
      row.graph_id = graphs[gi].id;
      row.mode = scenario.mode;
      row.value = scenario.value;
      row.alignment = flow_alignment(outcome.scores, g);
      row.mean_density = outcome.mean_density;
      row.full_activation_fraction = outcome.full_activation_fraction;
      row.included =
          !params.full_activation_only || outcome.full_activation_fraction >= 0.999;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

RewiringDipResult rewiring_dip(const RewiringDipParams& params) {
  RewiringDipResult result;
  for (std::size_t bi = 0; bi < params.betas.size(); ++bi) {
    const double beta = params.betas[bi];
    double density_sum = 0.0;
    double xi_sum = 0.0;
    std::size_t defined = 0;
    for (int r = 0; r < params.graphs_per_beta; ++r) {
      const std::uint64_t graph_seed =
          derive_seed(params.protocol.seed, bi * static_cast<std::uint64_t>(1000) + r);
      const Graph g = watts_strogatz(params.n, params.k, beta, graph_seed);
      ModelSpec model = params.protocol.model;
      model.threshold = params.threshold;
      const ScenarioOutcome outcome =
          run_scenario(g, model, params.protocol, derive_seed(graph_seed, 1));
      density_sum += outcome.mean_density;
      const SymmetryReport report = flow_symmetry(outcome.scores, g, true);
      if (report.defined) {
        xi_sum += report.xi_s;
        ++defined;
      }
    }
    RewiringDipRow row;
    row.beta = beta;
    row.n_graphs = params.graphs_per_beta;
    row.n_defined = defined;
    row.mean_density = density_sum / std::max(1, params.graphs_per_beta);
    row.mean_xi = defined ? xi_sum / static_cast<double>(defined) : 0.0;
    result.rows.push_back(row);
  }
  return result;
}

ConvergenceResult convergence_diagnostics(std::span<const NamedGraph> graphs,
                                          const ConvergenceParams& params) {
  ConvergenceResult result;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi].graph;
    const std::uint64_t graph_seed = derive_seed(params.protocol.seed, gi);
    ModelSpec model = params.protocol.model;
    model.threshold = params.threshold;

    for (std::size_t si = 0; si < params.sweep_counts.size(); ++si) {
      const int sweeps = params.sweep_counts[si];
      SweepProtocol protocol = params.protocol;
      protocol.sweeps = sweeps;
      const ScenarioOutcome a =
          run_scenario(g, model, protocol, derive_seed(graph_seed, 2 * si));
      const ScenarioOutcome b =
          run_scenario(g, model, protocol, derive_seed(graph_seed, 2 * si + 1));

      const auto as_doubles = [](const std::vector<std::uint64_t>& raw) {
        std::vector<double> values(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) values[i] = static_cast<double>(raw[i]);
        return values;
      };

      ConvergenceRow row;
      row.graph_id = graphs[gi].id;
      row.sweeps = sweeps;
      row.ni_corr = pearson(as_doubles(a.scores.ni_raw), as_doubles(b.scores.ni_raw));
      row.ti_corr = pearson(as_doubles(a.scores.ti_raw), as_doubles(b.scores.ti_raw));
      row.xi_a = flow_symmetry(a.scores, g, true);
      row.xi_b = flow_symmetry(b.scores, g, true);
      if (row.xi_a.defined && row.xi_b.defined) {
        row.rel_diff_pct = std::fabs(row.xi_a.xi_s - row.xi_b.xi_s) /
                           std::max(std::fabs(row.xi_a.xi_s), params.epsilon) * 100.0;
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

} // namespace ccflow
