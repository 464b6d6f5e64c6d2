#include "ccflow/metrics.hpp"

#include <vector>

namespace ccflow {

SymmetryReport flow_symmetry(const CausalScores& scores, const Graph& g,
                             bool include_zero_pairs, SymmetryStat stat) {
  std::vector<double> forward, backward;
  forward.reserve(g.edge_count());
  backward.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto f = scores.ti_raw[2 * static_cast<std::size_t>(e)];
    const auto b = scores.ti_raw[2 * static_cast<std::size_t>(e) + 1];
    if (!include_zero_pairs && f == 0 && b == 0) continue;
    forward.push_back(static_cast<double>(f));
    backward.push_back(static_cast<double>(b));
  }

  SymmetryReport report;
  report.n_edges = forward.size();
  const auto xi = stat == SymmetryStat::pearson ? pearson(forward, backward)
                                                : cosine_similarity(forward, backward);
  if (xi) {
    report.xi_s = *xi;
    report.defined = true;
  }
  return report;
}

FlowAlignment flow_alignment(const CausalScores& scores, const Graph& g) {
  FlowAlignment alignment;

  std::vector<double> ds, dk;
  ds.reserve(g.edge_count());
  dk.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [i, j] = g.edge_endpoints(e);
    const auto f = scores.ti_raw[2 * static_cast<std::size_t>(e)];
    const auto b = scores.ti_raw[2 * static_cast<std::size_t>(e) + 1];
    ds.push_back(static_cast<double>(f) - static_cast<double>(b));
    dk.push_back(static_cast<double>(g.degree(j)) - static_cast<double>(g.degree(i)));
  }
  alignment.n_edges = ds.size();
  alignment.rho_ds_dk = pearson(ds, dk);

  std::vector<double> ni, degree;
  ni.reserve(g.node_count());
  degree.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    ni.push_back(static_cast<double>(scores.ni_raw[v]));
    degree.push_back(static_cast<double>(g.degree(v)));
  }
  alignment.n_nodes = ni.size();
  alignment.rho_ni_k = pearson(ni, degree);

  std::vector<double> ni_over_k, degree_pos;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) continue;
    ni_over_k.push_back(static_cast<double>(scores.ni_raw[v]) /
                        static_cast<double>(g.degree(v)));
    degree_pos.push_back(static_cast<double>(g.degree(v)));
  }
  alignment.rho_nik_k = pearson(ni_over_k, degree_pos);

  return alignment;
}

} // namespace ccflow
