#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "ccflow/bridges.hpp"
#include "ccflow/causal.hpp"
#include "ccflow/contagion.hpp"
#include "ccflow/edge_list.hpp"
#include "ccflow/experiments.hpp"
#include "ccflow/graph_analysis.hpp"
#include "ccflow/metrics.hpp"
#include "ccflow/version.hpp"
#include "graph_source.hpp"
#include "manifest.hpp"
#include "table.hpp"

namespace {

using namespace ccflow;
using namespace ccflow::tools;
namespace fs = std::filesystem;
using nlohmann::json;

struct CommonOptions {
  std::string out_dir = ".";
  std::string format = "csv";
  std::uint64_t seed = 42;
  int threads = 0;  // 0 = hardware concurrency
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  const char* env_out = std::getenv("CCFLOW_OUT_DIR");
  if (env_out && *env_out) common.out_dir = env_out;
  cmd->add_option("--out", common.out_dir, "Output directory (env CCFLOW_OUT_DIR overrides the default)");
  cmd->add_option("--format", common.format, "Table format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--rng", common.seed, "Root RNG seed");
  cmd->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  cmd->configurable(true);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string prepare_out_dir(const CommonOptions& common) {
  fs::create_directories(common.out_dir);
  return common.out_dir;
}

json common_echo(const CommonOptions& common) {
  return json{{"out", common.out_dir},
              {"format", common.format},
              {"rng", common.seed},
              {"threads", common.threads}};
}

// --------------------------------------------------------------- model flags

struct ModelOptions {
  std::string family = "gi";
  std::string threshold_mode = "abs";
  double threshold = 2.0;
  std::string neighborhood = "closed";
  double q = 0.1;
  double icm_beta = 0.1;
  double ltm_sigma = 0.05;
  double ltm_phi = 0.5;
  std::string ltm_weights = "homogeneous";
};

void add_model_flags(CLI::App* cmd, ModelOptions& options) {
  cmd->add_option("--model", options.family, "gi | ltm | icm | noisy | noisy-single")
      ->check(CLI::IsMember({"gi", "ltm", "icm", "noisy", "noisy-single"}));
  cmd->add_option("--threshold-mode", options.threshold_mode, "abs | rel")
      ->check(CLI::IsMember({"abs", "rel"}));
  cmd->add_option("--threshold", options.threshold, "T (abs) or theta (rel)");
  cmd->add_option("--neighborhood", options.neighborhood,
                  "Relative-threshold denominator: closed | open")
      ->check(CLI::IsMember({"closed", "open"}));
  cmd->add_option("--q", options.q, "Subthreshold adoption probability (noisy families)");
  cmd->add_option("--icm-beta", options.icm_beta, "Edge transmission probability (icm)");
  cmd->add_option("--ltm-sigma", options.ltm_sigma, "Gaussian weight spread (ltm)");
  cmd->add_option("--ltm-phi", options.ltm_phi, "Activation level phi (ltm)");
  cmd->add_option("--ltm-weights", options.ltm_weights, "homogeneous | gaussian")
      ->check(CLI::IsMember({"homogeneous", "gaussian"}));
}

ThresholdMode parse_threshold_mode(const std::string& mode) {
  return mode == "rel" ? ThresholdMode::relative : ThresholdMode::absolute;
}

NeighborhoodMode parse_neighborhood(const std::string& mode) {
  return mode == "open" ? NeighborhoodMode::open : NeighborhoodMode::closed;
}

ModelSpec to_model_spec(const ModelOptions& options) {
  ModelSpec spec;
  if (options.family == "gi") spec.family = ModelFamily::gi;
  if (options.family == "ltm") spec.family = ModelFamily::ltm;
  if (options.family == "icm") spec.family = ModelFamily::icm;
  if (options.family == "noisy") spec.family = ModelFamily::noisy;
  if (options.family == "noisy-single") spec.family = ModelFamily::noisy_single;
  spec.threshold.mode = parse_threshold_mode(options.threshold_mode);
  spec.threshold.value = options.threshold;
  spec.threshold.neighborhood = parse_neighborhood(options.neighborhood);
  spec.noise_q = options.q;
  spec.icm_beta = options.icm_beta;
  spec.ltm.sigma = options.ltm_sigma;
  spec.ltm.phi = options.ltm_phi;
  spec.ltm.weights = options.ltm_weights == "gaussian" ? LtmConfig::Weights::gaussian
                                                       : LtmConfig::Weights::homogeneous;
  return spec;
}

json model_echo(const ModelOptions& options) {
  return json{{"model", options.family},
              {"threshold_mode", options.threshold_mode},
              {"threshold", options.threshold},
              {"neighborhood", options.neighborhood},
              {"q", options.q},
              {"icm_beta", options.icm_beta},
              {"ltm_sigma", options.ltm_sigma},
              {"ltm_phi", options.ltm_phi},
              {"ltm_weights", options.ltm_weights}};
}

struct SeedingOptions {
  std::string mode = "rcs";
  double fraction = 0.05;
  int sweeps = 1;
};

void add_seeding_flags(CLI::App* cmd, SeedingOptions& options) {
  cmd->add_option("--seed-mode", options.mode, "rs (uniform) | rcs (clustered)")
      ->check(CLI::IsMember({"rs", "rcs"}));
  cmd->add_option("--seed-frac", options.fraction, "Seed fraction p in (0, 1]");
  cmd->add_option("--sweeps", options.sweeps, "Sweeps (|V| cascades each)");
}

SeedMode parse_seed_mode(const std::string& mode) {
  return mode == "rs" ? SeedMode::random : SeedMode::clustered;
}

void add_graph_source_flags(CLI::App* cmd, GraphSourceOptions& options) {
  cmd->add_option("--ws", options.ws_specs, "Watts-Strogatz spec n:k:beta[:count], repeatable");
  cmd->add_option("--hk", options.hk_specs, "Clustered power-law spec n:m:p[:count], repeatable");
  cmd->add_option("--edge-list", options.edge_lists, "Edge-list file, repeatable");
  cmd->add_flag("--giant", options.giant_only, "Reduce edge-list graphs to their giant component");
}

// ------------------------------------------------------------------ generate

struct GenerateOptions {
  CommonOptions common;
  std::string kind;
  NodeId n = 200;
  NodeId k = 8;
  NodeId m = 4;
  double beta = 0.1;
  double p = 0.4;
  std::string tag = "graph";
};

int run_generate(const GenerateOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["generator"] = options.kind;
  echo["n"] = options.n;
  echo["tag"] = options.tag;

  Graph graph;
  json labels_meta;
  if (options.kind == "ws") {
    graph = watts_strogatz(options.n, options.k, options.beta, options.common.seed);
    echo["k"] = options.k;
    echo["beta"] = options.beta;
  } else if (options.kind == "hk") {
    graph = clustered_power_law(options.n, options.m, options.p, options.common.seed);
    echo["m"] = options.m;
    echo["p"] = options.p;
  } else {
    const auto two = two_disconnected_ws(options.n, options.k, options.beta, options.common.seed);
    graph = two.graph;
    echo["k"] = options.k;
    echo["beta"] = options.beta;
    echo["community_size"] = two.community_size;
  }

  RunManifest manifest("generate", echo);
  const std::string edges_path = (fs::path(out_dir) / (options.tag + ".edges")).string();
  {
    std::ofstream out(edges_path);
    write_edge_list(out, graph);
  }
  manifest.add_output(edges_path);

  const std::string meta_path = (fs::path(out_dir) / (options.tag + ".meta.json")).string();
  {
    json meta = echo;
    meta["nodes"] = graph.node_count();
    meta["edges"] = graph.edge_count();
    meta["mean_clustering"] = mean_clustering_coefficient(graph);
    std::ofstream out(meta_path);
    out << meta.dump(2) << '\n';
  }
  manifest.add_output(meta_path);
  manifest.write(out_dir);
  std::cout << "wrote " << edges_path << " (" << graph.node_count() << " nodes, "
            << graph.edge_count() << " edges)\n";
  return 0;
}

// ------------------------------------------------------------------ simulate

struct SimulateOptions {
  CommonOptions common;
  ModelOptions model;
  SeedingOptions seeding;
  std::string graph_path;
  bool giant = false;
  std::string seed_nodes;  // comma-separated labels: single-cascade mode
};

int run_simulate(const SimulateOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  auto loaded = load_edge_list_file(options.graph_path);
  if (options.giant) {
    const auto gc = giant_component_mapped(loaded.graph);
    std::vector<std::string> labels;
    labels.reserve(gc.original_nodes.size());
    for (const NodeId v : gc.original_nodes) labels.push_back(loaded.labels[v]);
    loaded.graph = gc.graph;
    loaded.labels = std::move(labels);
  }
  const Graph& g = loaded.graph;
  const ModelSpec model = to_model_spec(options.model);

  json echo = common_echo(options.common);
  echo["graph"] = options.graph_path;
  echo["giant"] = options.giant;
  echo["model"] = model_echo(options.model);
  RunManifest manifest("simulate", echo);

  if (!options.seed_nodes.empty()) {
    // Single traced cascade from an explicit seed list.
    SeedSet seeds;
    std::size_t start = 0;
    while (start <= options.seed_nodes.size()) {
      const auto end = options.seed_nodes.find(',', start);
      const std::string name =
          options.seed_nodes.substr(start, end == std::string::npos ? end : end - start);
      if (!name.empty()) {
        const auto it = std::find(loaded.labels.begin(), loaded.labels.end(), name);
        if (it == loaded.labels.end())
          throw std::runtime_error("unknown seed node '" + name + "'");
        seeds.members.push_back(static_cast<NodeId>(it - loaded.labels.begin()));
      }
      if (end == std::string::npos) break;
      start = end + 1;
    }
    std::sort(seeds.members.begin(), seeds.members.end());
    seeds.fraction = static_cast<double>(seeds.members.size()) / g.node_count();

    Rng rng(options.common.seed);
    const CascadeRecord record = run_model(g, model, seeds, rng);

    Table table({"node", "activation_time"});
    for (NodeId v = 0; v < g.node_count(); ++v)
      table.add_row({loaded.labels[v], Table::cell(static_cast<std::int64_t>(record.activation_time[v]))});
    manifest.add_output(table.write(out_dir, "activation", options.common.format));
    manifest.write(out_dir);
    std::cout << "density " << Table::cell(spreading_density(record, g)) << ", converged at step "
              << record.converged_at << "\n";
    return 0;
  }

  AggregateOptions aggregate;
  aggregate.seed_mode = parse_seed_mode(options.seeding.mode);
  aggregate.seed_fraction = options.seeding.fraction;
  aggregate.seed = options.common.seed;
  aggregate.threads = resolve_threads(options.common.threads);
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  echo["sweeps"] = options.seeding.sweeps;

  const std::uint64_t total =
      static_cast<std::uint64_t>(options.seeding.sweeps) * g.node_count();
  const AggregateResult result = aggregate_runs(g, model, total, aggregate);

  Table nodes({"node", "ni_raw", "ni_norm"});
  for (NodeId v = 0; v < g.node_count(); ++v) {
    nodes.add_row({loaded.labels[v], Table::cell(result.scores.ni_raw[v]),
                   Table::cell(result.scores.ni_norm[v])});
  }
  manifest.add_output(nodes.write(out_dir, "node_scores", options.common.format));

  Table ties({"src", "dst", "ti_raw", "ti_norm"});
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge_endpoints(e);
    const auto fwd = 2 * static_cast<std::size_t>(e);
    ties.add_row({loaded.labels[u], loaded.labels[v], Table::cell(result.scores.ti_raw[fwd]),
                  Table::cell(result.scores.ti_norm[fwd])});
    ties.add_row({loaded.labels[v], loaded.labels[u], Table::cell(result.scores.ti_raw[fwd + 1]),
                  Table::cell(result.scores.ti_norm[fwd + 1])});
  }
  manifest.add_output(ties.write(out_dir, "tie_scores", options.common.format));

  const SymmetryReport xi_incl = flow_symmetry(result.scores, g, true);
  const SymmetryReport xi_excl = flow_symmetry(result.scores, g, false);
  const FlowAlignment alignment = flow_alignment(result.scores, g);
  json metrics;
  metrics["runs"] = result.runs;
  metrics["mean_density"] = result.mean_density();
  metrics["full_activation_fraction"] = result.full_activation_fraction();
  metrics["xi_s"] = {{"value", xi_incl.xi_s}, {"defined", xi_incl.defined}, {"n_edges", xi_incl.n_edges}};
  metrics["xi_s_excluding_unused"] = {
      {"value", xi_excl.xi_s}, {"defined", xi_excl.defined}, {"n_edges", xi_excl.n_edges}};
  const auto opt = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  metrics["rho_ds_dk"] = opt(alignment.rho_ds_dk);
  metrics["rho_ni_k"] = opt(alignment.rho_ni_k);
  metrics["rho_nik_k"] = opt(alignment.rho_nik_k);
  metrics["config"] = echo;
  const std::string metrics_path = (fs::path(out_dir) / "metrics.json").string();
  {
    std::ofstream out(metrics_path);
    out << metrics.dump(2) << '\n';
  }
  manifest.add_output(metrics_path);
  manifest.write(out_dir);
  std::cout << "runs " << result.runs << ", mean density " << Table::cell(result.mean_density())
            << ", xi_s " << (xi_incl.defined ? Table::cell(xi_incl.xi_s) : "undefined") << "\n";
  return 0;
}

// ----------------------------------------------------------------- symmetry

struct SymmetryCliOptions {
  CommonOptions common;
  ModelOptions model;
  SeedingOptions seeding;
  GraphSourceOptions graphs;
  std::vector<double> thresholds{1.0, 2.0, 3.0};
  double density_filter = 0.0;
  bool pool_excluded = false;
};

int run_symmetry(const SymmetryCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["model"] = model_echo(options.model);
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  echo["sweeps"] = options.seeding.sweeps;
  echo["thresholds"] = options.thresholds;
  echo["density_filter"] = options.density_filter;
  const auto graphs = build_graph_set(options.graphs, options.common.seed, &echo);

  SymmetrySweepParams params;
  params.protocol.model = to_model_spec(options.model);
  params.protocol.seed_mode = parse_seed_mode(options.seeding.mode);
  params.protocol.seed_fraction = options.seeding.fraction;
  params.protocol.sweeps = options.seeding.sweeps;
  params.protocol.seed = options.common.seed;
  params.protocol.threads = resolve_threads(options.common.threads);
  params.sweep = {parse_threshold_mode(options.model.threshold_mode),
                  parse_neighborhood(options.model.neighborhood), options.thresholds};
  params.density_filter = options.density_filter;
  params.pool_excluded_variant = options.pool_excluded;

  const auto result = symmetry_vs_threshold(graphs, params);

  RunManifest manifest("symmetry-sweep", echo);
  Table table({"graph", "threshold", "xi_s", "xi_defined", "n_edges", "xi_s_excl",
               "xi_excl_defined", "mean_density", "included"});
  for (const auto& row : result.rows) {
    table.add_row({row.graph_id, Table::cell(row.threshold), Table::cell(row.xi_incl.xi_s),
                   Table::cell(row.xi_incl.defined), Table::cell(static_cast<std::uint64_t>(row.xi_incl.n_edges)),
                   Table::cell(row.xi_excl.xi_s), Table::cell(row.xi_excl.defined),
                   Table::cell(row.mean_density), Table::cell(row.included)});
  }
  manifest.add_output(table.write(out_dir, "symmetry", options.common.format));
  manifest.write(out_dir);

  if (result.pooled) {
    std::cout << "pooled pearson(threshold, xi_s) = " << Table::cell(result.pooled->r) << " (n="
              << result.pooled->n << ", p=" << Table::cell(result.pooled->p_two_sided) << ")\n";
  } else {
    std::cout << "pooled correlation undefined (all scenarios filtered or degenerate)\n";
  }
  return 0;
}

// ---------------------------------------------------------------- tie range

struct TieRangeCliOptions {
  CommonOptions common;
  ModelOptions model;
  SeedingOptions seeding;
  GraphSourceOptions graphs;
  std::vector<double> thresholds{2.0};
  int ti_bins = 10;
};

int run_tie_range(const TieRangeCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["model"] = model_echo(options.model);
  echo["thresholds"] = options.thresholds;
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  echo["sweeps"] = options.seeding.sweeps;
  const auto graphs = build_graph_set(options.graphs, options.common.seed, &echo);

  TieRangeParams params;
  params.protocol.model = to_model_spec(options.model);
  params.protocol.seed_mode = parse_seed_mode(options.seeding.mode);
  params.protocol.seed_fraction = options.seeding.fraction;
  params.protocol.sweeps = options.seeding.sweeps;
  params.protocol.seed = options.common.seed;
  params.protocol.threads = resolve_threads(options.common.threads);
  params.sweep = {parse_threshold_mode(options.model.threshold_mode),
                  parse_neighborhood(options.model.neighborhood), options.thresholds};
  params.ti_bins = options.ti_bins;

  const auto result = tie_range_asymmetry(graphs, params);

  RunManifest manifest("tie-range", echo);
  Table edges({"graph", "threshold", "u", "v", "range", "max_ti", "delta"});
  for (const auto& r : result.edges) {
    edges.add_row({r.graph_id, Table::cell(r.threshold), Table::cell(r.u), Table::cell(r.v),
                   Table::cell(r.range), Table::cell(r.max_ti), Table::cell(r.delta)});
  }
  manifest.add_output(edges.write(out_dir, "tie_range_edges", options.common.format));

  Table cells({"range", "ti_bin", "mean_delta", "count"});
  for (const auto& c : result.cells) {
    cells.add_row({Table::cell(c.range), Table::cell(c.ti_bin), Table::cell(c.mean_delta),
                   Table::cell(static_cast<std::uint64_t>(c.count))});
  }
  manifest.add_output(cells.write(out_dir, "tie_range_cells", options.common.format));
  manifest.write(out_dir);
  std::cout << result.edges.size() << " finite-range edge records, "
            << result.infinite_range_edges << " infinite-range edges excluded\n";
  return 0;
}

// ------------------------------------------------------------- tie strength

struct TieStrengthCliOptions {
  CommonOptions common;
  ModelOptions model;
  SeedingOptions seeding;
  GraphSourceOptions graphs;
  std::vector<double> thresholds{0.1, 0.15, 0.2, 0.25, 0.3};
  bool use_sum = false;
};

int run_tie_strength(const TieStrengthCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["model"] = model_echo(options.model);
  echo["thresholds"] = options.thresholds;
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  echo["sweeps"] = options.seeding.sweeps;
  echo["use_sum"] = options.use_sum;
  const auto graphs = build_graph_set(options.graphs, options.common.seed, &echo);

  TieStrengthParams params;
  params.protocol.model = to_model_spec(options.model);
  params.protocol.seed_mode = parse_seed_mode(options.seeding.mode);
  params.protocol.seed_fraction = options.seeding.fraction;
  params.protocol.sweeps = options.seeding.sweeps;
  params.protocol.seed = options.common.seed;
  params.protocol.threads = resolve_threads(options.common.threads);
  params.sweep = {parse_threshold_mode(options.model.threshold_mode),
                  parse_neighborhood(options.model.neighborhood), options.thresholds};
  params.use_sum = options.use_sum;

  const auto result = tie_strength_importance(graphs, params);

  RunManifest manifest("tie-strength", echo);
  static const char* kTercile[] = {"weak", "medium", "strong"};
  Table table({"graph", "threshold", "tercile", "mean_ti", "se", "n"});
  for (const auto& row : result.rows) {
    table.add_row({row.graph_id, Table::cell(row.threshold), kTercile[row.tercile],
                   Table::cell(row.importance.mean), Table::cell(row.importance.se),
                   Table::cell(static_cast<std::uint64_t>(row.importance.n))});
  }
  manifest.add_output(table.write(out_dir, "tie_strength", options.common.format));

  Table pooled({"tercile", "mean_ti", "se", "n"});
  for (int t = 0; t < 3; ++t) {
    pooled.add_row({kTercile[t], Table::cell(result.pooled[t].mean),
                    Table::cell(result.pooled[t].se),
                    Table::cell(static_cast<std::uint64_t>(result.pooled[t].n))});
  }
  manifest.add_output(pooled.write(out_dir, "tie_strength_pooled", options.common.format));
  manifest.write(out_dir);
  std::cout << "pooled means (weak, medium, strong) = " << Table::cell(result.pooled[0].mean)
            << ", " << Table::cell(result.pooled[1].mean) << ", "
            << Table::cell(result.pooled[2].mean) << "\n";
  return 0;
}

// ---------------------------------------------------------------- periphery

struct PeripheryCliOptions {
  CommonOptions common;
  ModelOptions model;
  SeedingOptions seeding;
  GraphSourceOptions graphs;
  std::vector<std::string> scenarios{"abs:1", "abs:2", "abs:3", "rel:0.1"};
  bool full_activation_only = false;
};

int run_periphery(const PeripheryCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["model"] = model_echo(options.model);
  echo["scenarios"] = options.scenarios;
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  echo["sweeps"] = options.seeding.sweeps;
  echo["full_activation_only"] = options.full_activation_only;
  const auto graphs = build_graph_set(options.graphs, options.common.seed, &echo);

  PeripheryParams params;
  params.protocol.model = to_model_spec(options.model);
  params.protocol.seed_mode = parse_seed_mode(options.seeding.mode);
  params.protocol.seed_fraction = options.seeding.fraction;
  params.protocol.sweeps = options.seeding.sweeps;
  params.protocol.seed = options.common.seed;
  params.protocol.threads = resolve_threads(options.common.threads);
  params.neighborhood = parse_neighborhood(options.model.neighborhood);
  params.full_activation_only = options.full_activation_only;
  for (const auto& scenario : options.scenarios) {
    const auto sep = scenario.find(':');
    if (sep == std::string::npos)
      throw std::invalid_argument("--scenario expects mode:value, got '" + scenario + "'");
    PeripheryScenario s;
    s.mode = parse_threshold_mode(scenario.substr(0, sep));
    s.value = std::stod(scenario.substr(sep + 1));
    params.scenarios.push_back(s);
  }

  const auto result = periphery_core_sweep(graphs, params);

  RunManifest manifest("periphery", echo);
  Table table({"graph", "mode", "value", "rho_ds_dk", "rho_ni_k", "rho_nik_k", "mean_density",
               "full_activation_fraction", "included"});
  for (const auto& row : result.rows) {
    table.add_row({row.graph_id, row.mode == ThresholdMode::absolute ? "abs" : "rel",
                   Table::cell(row.value), Table::cell(row.alignment.rho_ds_dk),
                   Table::cell(row.alignment.rho_ni_k), Table::cell(row.alignment.rho_nik_k),
                   Table::cell(row.mean_density), Table::cell(row.full_activation_fraction),
                   Table::cell(row.included)});
  }
  manifest.add_output(table.write(out_dir, "periphery", options.common.format));
  manifest.write(out_dir);
  std::cout << result.rows.size() << " scenario rows\n";
  return 0;
}

// ------------------------------------------------------------- rewiring dip

struct RewiringCliOptions {
  CommonOptions common;
  SeedingOptions seeding{.mode = "rs", .fraction = 0.02, .sweeps = 1};
  NodeId n = 200;
  NodeId k = 8;
  std::vector<double> betas;
  int graphs_per_beta = 2;
  double threshold = 2.0;
};

int run_rewiring_dip(const RewiringCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["n"] = options.n;
  echo["k"] = options.k;
  echo["betas"] = options.betas;
  echo["graphs_per_beta"] = options.graphs_per_beta;
  echo["threshold"] = options.threshold;
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  echo["sweeps"] = options.seeding.sweeps;

  RewiringDipParams params;
  params.n = options.n;
  params.k = options.k;
  params.betas = options.betas;
  params.graphs_per_beta = options.graphs_per_beta;
  params.protocol.seed_mode = parse_seed_mode(options.seeding.mode);
  params.protocol.seed_fraction = options.seeding.fraction;
  params.protocol.sweeps = options.seeding.sweeps;
  params.protocol.seed = options.common.seed;
  params.protocol.threads = resolve_threads(options.common.threads);
  params.threshold = {ThresholdMode::absolute, options.threshold, NeighborhoodMode::closed};

  const auto result = rewiring_dip(params);

  RunManifest manifest("rewiring-dip", echo);
  Table table({"beta", "mean_density", "mean_xi", "n_graphs", "n_defined"});
  for (const auto& row : result.rows) {
    table.add_row({Table::cell(row.beta), Table::cell(row.mean_density), Table::cell(row.mean_xi),
                   Table::cell(static_cast<std::uint64_t>(row.n_graphs)),
                   Table::cell(static_cast<std::uint64_t>(row.n_defined))});
  }
  manifest.add_output(table.write(out_dir, "rewiring_dip", options.common.format));
  manifest.write(out_dir);
  std::cout << result.rows.size() << " beta rows\n";
  return 0;
}

// -------------------------------------------------------------- convergence

struct ConvergeCliOptions {
  CommonOptions common;
  ModelOptions model;
  SeedingOptions seeding;
  GraphSourceOptions graphs;
  std::vector<int> sweep_counts{1, 2, 4, 8};
};

int run_converge(const ConvergeCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["model"] = model_echo(options.model);
  echo["sweep_counts"] = options.sweep_counts;
  echo["seed_mode"] = options.seeding.mode;
  echo["seed_frac"] = options.seeding.fraction;
  const auto graphs = build_graph_set(options.graphs, options.common.seed, &echo);

  ConvergenceParams params;
  params.protocol.model = to_model_spec(options.model);
  params.protocol.seed_mode = parse_seed_mode(options.seeding.mode);
  params.protocol.seed_fraction = options.seeding.fraction;
  params.protocol.seed = options.common.seed;
  params.protocol.threads = resolve_threads(options.common.threads);
  params.threshold = {parse_threshold_mode(options.model.threshold_mode), options.model.threshold,
                      parse_neighborhood(options.model.neighborhood)};
  params.sweep_counts = options.sweep_counts;

  const auto result = convergence_diagnostics(graphs, params);

  RunManifest manifest("converge", echo);
  Table table({"graph", "sweeps", "ni_corr", "ti_corr", "xi_a", "xi_b", "rel_diff_pct"});
  for (const auto& row : result.rows) {
    table.add_row({row.graph_id, Table::cell(row.sweeps), Table::cell(row.ni_corr),
                   Table::cell(row.ti_corr), Table::cell(row.xi_a.xi_s),
                   Table::cell(row.xi_b.xi_s), Table::cell(row.rel_diff_pct)});
  }
  manifest.add_output(table.write(out_dir, "convergence", options.common.format));
  manifest.write(out_dir);
  std::cout << result.rows.size() << " convergence rows\n";
  return 0;
}

// ------------------------------------------------------------------ bridges

struct BridgeCliOptions {
  CommonOptions common;
  NodeId n = 100;
  NodeId k = 6;
  double beta = 0.1;
  std::uint32_t threshold = 3;
  std::vector<double> closure_probs{0.0};
  std::uint64_t trials = 1000;
  std::uint32_t max_ties = 150;
  bool strict_closure = false;
};

int run_bridge_experiment(const BridgeCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["n"] = options.n;
  echo["k"] = options.k;
  echo["beta"] = options.beta;
  echo["T"] = options.threshold;
  echo["c"] = options.closure_probs;
  echo["trials"] = options.trials;
  echo["max_ties"] = options.max_ties;
  echo["strict_closure"] = options.strict_closure;

  BridgeTrialParams params;
  params.n = options.n;
  params.k = options.k;
  params.beta = options.beta;
  params.threshold = options.threshold;
  params.max_ties = options.max_ties;
  params.strict_closure = options.strict_closure;

  const auto result =
      ccflow::run_bridge_experiment(params, options.closure_probs, options.trials,
                                    options.common.seed, resolve_threads(options.common.threads));

  RunManifest manifest("bridge-experiment", echo);
  Table curve({"c", "ties_added", "spreadable", "symmetric", "p_symmetric"});
  for (const auto& point : result.curve) {
    curve.add_row({Table::cell(point.closure_prob), Table::cell(point.ties_added),
                   Table::cell(point.spreadable), Table::cell(point.symmetric),
                   Table::cell(point.p_symmetric)});
  }
  manifest.add_output(curve.write(out_dir, "bridge_curve", options.common.format));

  Table first({"c", "a_to_b", "b_to_a", "symmetric"});
  for (const auto& row : result.first_spread) {
    first.add_row({Table::cell(row.closure_prob), Table::cell(row.a_to_b),
                   Table::cell(row.b_to_a), Table::cell(row.symmetric)});
  }
  manifest.add_output(first.write(out_dir, "bridge_first_spread", options.common.format));
  manifest.write(out_dir);
  for (const auto& row : result.first_spread) {
    std::cout << "c=" << Table::cell(row.closure_prob) << ": first spread " << row.a_to_b << " a->b, "
              << row.b_to_a << " b->a, " << row.symmetric << " symmetric\n";
  }
  return 0;
}

struct BridgeCountCliOptions {
  CommonOptions common;
  std::uint32_t n_a = 4;
  std::uint32_t n_b = 4;
  std::uint32_t threshold = 2;
  bool oracle = false;
};

int run_bridge_count(const BridgeCountCliOptions& options) {
  const auto closed = count_bridge_pairs(options.n_a, options.n_b, options.threshold);
  std::cout << "sym " << closed.sym << ", asym " << closed.asym;
  if (closed.ratio_defined)
    std::cout << ", ratio " << closed.ratio_num << "/" << closed.ratio_den;
  std::cout << "\n";
  if (options.oracle) {
    const auto enumerated =
        enumerate_bridge_pairs_oracle(options.n_a, options.n_b, options.threshold);
    std::cout << "oracle sym " << enumerated.sym << ", asym " << enumerated.asym
              << (enumerated.sym == closed.sym && enumerated.asym == closed.asym
                      ? " (matches closed form)"
                      : " (MISMATCH)")
              << "\n";
    if (enumerated.sym != closed.sym || enumerated.asym != closed.asym) return 1;
  }
  return 0;
}

struct IncidenceCliOptions {
  CommonOptions common;
  std::uint32_t n = 100;
  std::vector<std::uint32_t> thresholds{2, 3, 4};
  std::uint64_t trials = 100000;
};

int run_incidence_tail(const IncidenceCliOptions& options) {
  const std::string out_dir = prepare_out_dir(options.common);
  json echo = common_echo(options.common);
  echo["n"] = options.n;
  echo["thresholds"] = options.thresholds;
  echo["trials"] = options.trials;
  RunManifest manifest("incidence-tail", echo);

  Table table({"T", "p_hat", "bound", "trials"});
  Rng rng(options.common.seed);
  for (const auto t : options.thresholds) {
    const auto estimate = incidence_tail_estimate(options.n, t, options.trials, rng);
    table.add_row({Table::cell(t), Table::cell(estimate.p_hat), Table::cell(estimate.bound),
                   Table::cell(estimate.trials)});
    std::cout << "T=" << t << ": p_hat " << Table::cell(estimate.p_hat) << " <= bound "
              << Table::cell(estimate.bound) << "\n";
  }
  manifest.add_output(table.write(out_dir, "incidence_tail", options.common.format));
  manifest.write(out_dir);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-contagion causal flow analysis toolkit"};
  app.set_version_flag("--version", ccflow::kToolVersion);
  app.set_config("--config", "",
                 "key=value file with a [subcommand] section; flags override");
  app.require_subcommand(1);

  GenerateOptions generate_options;
  auto* generate = app.add_subcommand("generate", "Generate graphs with metadata sidecars");
  generate->add_option("kind", generate_options.kind, "ws | hk | two-ws")
      ->required()
      ->check(CLI::IsMember({"ws", "hk", "two-ws"}));
  generate->add_option("--n", generate_options.n, "Node count (per community for two-ws)");
  generate->add_option("--k", generate_options.k, "Mean degree (ws, two-ws)");
  generate->add_option("--m", generate_options.m, "Edges per new node (hk)");
  generate->add_option("--beta", generate_options.beta, "Rewiring probability (ws, two-ws)");
  generate->add_option("--p", generate_options.p, "Triangle probability (hk)");
  generate->add_option("--tag", generate_options.tag, "Output file stem");
  add_common(generate, generate_options.common);

  SimulateOptions simulate_options;
  auto* simulate = app.add_subcommand("simulate", "Run cascades and causal score aggregation");
  simulate->add_option("--graph", simulate_options.graph_path, "Edge-list file")->required();
  simulate->add_flag("--giant", simulate_options.giant, "Use the giant component only");
  simulate->add_option("--seed-nodes", simulate_options.seed_nodes,
                       "Comma-separated node names: trace one cascade instead of aggregating");
  add_model_flags(simulate, simulate_options.model);
  add_seeding_flags(simulate, simulate_options.seeding);
  add_common(simulate, simulate_options.common);

  SymmetryCliOptions symmetry_options;
  auto* symmetry = app.add_subcommand("symmetry-sweep", "Flow symmetry across a threshold sweep");
  add_graph_source_flags(symmetry, symmetry_options.graphs);
  symmetry->add_option("--thresholds", symmetry_options.thresholds, "Sweep values")->delimiter(',');
  symmetry->add_option("--density-filter", symmetry_options.density_filter,
                       "Include scenarios with mean density above this (0 = off)");
  symmetry->add_flag("--pool-excluded", symmetry_options.pool_excluded,
                     "Pool the zero-pair-excluded symmetry variant");
  add_model_flags(symmetry, symmetry_options.model);
  add_seeding_flags(symmetry, symmetry_options.seeding);
  add_common(symmetry, symmetry_options.common);

  TieRangeCliOptions tie_range_options;
  auto* tie_range = app.add_subcommand("tie-range", "Per-edge range vs importance asymmetry");
  add_graph_source_flags(tie_range, tie_range_options.graphs);
  tie_range->add_option("--thresholds", tie_range_options.thresholds, "Sweep values")->delimiter(',');
  tie_range->add_option("--ti-bins", tie_range_options.ti_bins, "Linear bins over max_ti");
  add_model_flags(tie_range, tie_range_options.model);
  add_seeding_flags(tie_range, tie_range_options.seeding);
  add_common(tie_range, tie_range_options.common);

  TieStrengthCliOptions tie_strength_options;
  auto* tie_strength = app.add_subcommand("tie-strength", "Tercile mean tie importance");
  add_graph_source_flags(tie_strength, tie_strength_options.graphs);
  tie_strength->add_option("--thresholds", tie_strength_options.thresholds, "Sweep values")
      ->delimiter(',');
  tie_strength->add_flag("--sum", tie_strength_options.use_sum,
                         "Undirected importance as the sum of directions instead of the max");
  add_model_flags(tie_strength, tie_strength_options.model);
  add_seeding_flags(tie_strength, tie_strength_options.seeding);
  add_common(tie_strength, tie_strength_options.common);

  PeripheryCliOptions periphery_options;
  auto* periphery = app.add_subcommand("periphery", "Core-periphery flow alignment sweep");
  add_graph_source_flags(periphery, periphery_options.graphs);
  periphery->add_option("--scenario", periphery_options.scenarios,
                        "Threshold scenario mode:value (abs:2, rel:0.1), repeatable");
  periphery->add_flag("--full-activation-only", periphery_options.full_activation_only,
                      "Include only scenarios where every run activates the whole graph");
  add_model_flags(periphery, periphery_options.model);
  add_seeding_flags(periphery, periphery_options.seeding);
  add_common(periphery, periphery_options.common);

  RewiringCliOptions rewiring_options;
  auto* rewiring = app.add_subcommand("rewiring-dip", "Density and symmetry across rewiring rates");
  rewiring->add_option("--n", rewiring_options.n, "Nodes");
  rewiring->add_option("--k", rewiring_options.k, "Mean degree");
  rewiring->add_option("--betas", rewiring_options.betas, "Rewiring probabilities")
      ->delimiter(',')
      ->required();
  rewiring->add_option("--graphs-per-beta", rewiring_options.graphs_per_beta, "Graphs per beta");
  rewiring->add_option("--T", rewiring_options.threshold, "Absolute threshold");
  add_seeding_flags(rewiring, rewiring_options.seeding);
  add_common(rewiring, rewiring_options.common);

  ConvergeCliOptions converge_options;
  auto* converge = app.add_subcommand("converge", "Consecutive-run stability diagnostics");
  add_graph_source_flags(converge, converge_options.graphs);
  converge->add_option("--sweep-counts", converge_options.sweep_counts, "Sweep counts to test")
      ->delimiter(',');
  add_model_flags(converge, converge_options.model);
  add_seeding_flags(converge, converge_options.seeding);
  add_common(converge, converge_options.common);

  BridgeCliOptions bridge_options;
  auto* bridge = app.add_subcommand("bridge-experiment", "Cross-community bridge formation trials");
  bridge->add_option("--n", bridge_options.n, "Nodes per community");
  bridge->add_option("--k", bridge_options.k, "Mean degree");
  bridge->add_option("--beta", bridge_options.beta, "Rewiring probability");
  bridge->add_option("--T", bridge_options.threshold, "Contagion threshold");
  bridge->add_option("--c", bridge_options.closure_probs, "Triadic closure probabilities")
      ->delimiter(',');
  bridge->add_option("--trials", bridge_options.trials, "Trials per closure probability");
  bridge->add_option("--max-ties", bridge_options.max_ties, "Cross ties added per trial");
  bridge->add_flag("--strict-closure", bridge_options.strict_closure,
                   "Require a closing triangle on both endpoints");
  add_common(bridge, bridge_options.common);

  BridgeCountCliOptions bridge_count_options;
  auto* bridge_count = app.add_subcommand("bridge-count", "Exact minimal-bridge pair counts");
  bridge_count->add_option("--na", bridge_count_options.n_a, "Community A size");
  bridge_count->add_option("--nb", bridge_count_options.n_b, "Community B size");
  bridge_count->add_option("--T", bridge_count_options.threshold, "Contagion threshold");
  bridge_count->add_flag("--oracle", bridge_count_options.oracle,
                         "Also run the brute-force enumeration and compare");
  add_common(bridge_count, bridge_count_options.common);

  IncidenceCliOptions incidence_options;
  auto* incidence = app.add_subcommand("incidence-tail", "Monte Carlo incidence tail estimates");
  incidence->add_option("--n", incidence_options.n, "Community size");
  incidence->add_option("--T", incidence_options.thresholds, "Thresholds")->delimiter(',');
  incidence->add_option("--trials", incidence_options.trials, "Trials per threshold");
  add_common(incidence, incidence_options.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return run_generate(generate_options);
    if (simulate->parsed()) return run_simulate(simulate_options);
    if (symmetry->parsed()) return run_symmetry(symmetry_options);
    if (tie_range->parsed()) return run_tie_range(tie_range_options);
    if (tie_strength->parsed()) return run_tie_strength(tie_strength_options);
    if (periphery->parsed()) return run_periphery(periphery_options);
    if (rewiring->parsed()) return run_rewiring_dip(rewiring_options);
    if (converge->parsed()) return run_converge(converge_options);
    if (bridge->parsed()) return run_bridge_experiment(bridge_options);
    if (bridge_count->parsed()) return run_bridge_count(bridge_count_options);
    if (incidence->parsed()) return run_incidence_tail(incidence_options);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
