#pragma once

#include <cstddef>
#include <optional>

#include "ccflow/causal.hpp"
#include "ccflow/graph.hpp"
#include "ccflow/stats.hpp"

namespace ccflow {

enum class SymmetryStat : std::uint8_t { pearson, cosine };

/// Causal flow symmetry: correlation between the two directions' tie
/// importance over the network's edges.
struct SymmetryReport {
  double xi_s = 0.0;
  std::size_t n_edges = 0;  // undirected edges entering the statistic
  bool defined = false;     // false when variance vanishes or n_edges < 2
};

/// Pairs (TI(i,j), TI(j,i)) per undirected edge in canonical orientation and
/// correlates them. Edges with zero counts in both directions are included
/// by default; include_zero_pairs=false drops them.
SymmetryReport flow_symmetry(const CausalScores& scores, const Graph& g,
                             bool include_zero_pairs = true,
                             SymmetryStat stat = SymmetryStat::pearson);

/// Degree-alignment correlations of the causal flow: rho(dS, dk) over edges
/// (dS = TI(i,j) - TI(j,i), dk = k(j) - k(i), one canonical orientation per
/// edge), rho(NI, k) over nodes, rho(NI/k, k) over nodes with k > 0.
/// Undefined correlations stay unset rather than being coerced to 0.
struct FlowAlignment {
  std::optional<double> rho_ds_dk;
  std::optional<double> rho_ni_k;
  std::optional<double> rho_nik_k;
  std::size_t n_edges = 0;
  std::size_t n_nodes = 0;
};

FlowAlignment flow_alignment(const CausalScores& scores, const Graph& g);

} // namespace ccflow
