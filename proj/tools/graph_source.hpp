#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccflow/edge_list.hpp"
#include "ccflow/experiments.hpp"
#include "ccflow/generators.hpp"
#include "ccflow/rng.hpp"
#include "json.hpp"

namespace ccflow::tools {

/// Graph sources shared by the experiment subcommands: repeatable generator
/// specs ("n:k:beta[:count]" / "n:m:p[:count]") plus edge-list files.
struct GraphSourceOptions {
  std::vector<std::string> ws_specs;
  std::vector<std::string> hk_specs;
  std::vector<std::string> edge_lists;
  bool giant_only = false;
};

inline std::vector<double> split_numbers(const std::string& text, char sep) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    const std::string token = text.substr(start, end == std::string::npos ? end : end - start);
    if (!token.empty()) values.push_back(std::stod(token));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return values;
}

inline std::vector<NamedGraph> build_graph_set(const GraphSourceOptions& options,
                                               std::uint64_t root_seed,
                                               nlohmann::json* echo = nullptr) {
  std::vector<NamedGraph> graphs;
  std::uint64_t stream = 0;
  const std::uint64_t gen_root = derive_seed(root_seed, 0xA11CE);

  for (const auto& spec : options.ws_specs) {
    const auto parts = split_numbers(spec, ':');
    if (parts.size() < 3 || parts.size() > 4)
      throw std::invalid_argument("--ws expects n:k:beta[:count], got '" + spec + "'");
    const auto n = static_cast<NodeId>(parts[0]);
    const auto k = static_cast<NodeId>(parts[1]);
    const double beta = parts[2];
    const int count = parts.size() == 4 ? static_cast<int>(parts[3]) : 1;
    for (int i = 0; i < count; ++i) {
      const std::string id = "ws-n" + std::to_string(n) + "-k" + std::to_string(k) + "-b" +
                             std::to_string(beta) + "-i" + std::to_string(i);
      graphs.push_back({id, watts_strogatz(n, k, beta, derive_seed(gen_root, stream++))});
    }
  }
  for (const auto& spec : options.hk_specs) {
    const auto parts = split_numbers(spec, ':');
    if (parts.size() < 3 || parts.size() > 4)
      throw std::invalid_argument("--hk expects n:m:p[:count], got '" + spec + "'");
    const auto n = static_cast<NodeId>(parts[0]);
    const auto m = static_cast<NodeId>(parts[1]);
    const double p = parts[2];
    const int count = parts.size() == 4 ? static_cast<int>(parts[3]) : 1;
    for (int i = 0; i < count; ++i) {
      const std::string id = "hk-n" + std::to_string(n) + "-m" + std::to_string(m) + "-p" +
                             std::to_string(p) + "-i" + std::to_string(i);
      graphs.push_back({id, clustered_power_law(n, m, p, derive_seed(gen_root, stream++))});
    }
  }
  for (const auto& path : options.edge_lists) {
    auto loaded = load_edge_list_file(path);
    Graph g = options.giant_only ? giant_component(loaded.graph) : std::move(loaded.graph);
    graphs.push_back({path, std::move(g)});
  }
  if (graphs.empty())
    throw std::invalid_argument("no graphs: pass --ws, --hk or --edge-list");

  if (echo) {
    (*echo)["ws"] = options.ws_specs;
    (*echo)["hk"] = options.hk_specs;
    (*echo)["edge_lists"] = options.edge_lists;
    (*echo)["giant_only"] = options.giant_only;
    auto& ids = (*echo)["graph_ids"] = nlohmann::json::array();
    for (const auto& g : graphs) ids.push_back(g.id);
  }
  return graphs;
}

} // namespace ccflow::tools
