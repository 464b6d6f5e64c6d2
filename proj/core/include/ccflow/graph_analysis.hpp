#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccflow/graph.hpp"

namespace ccflow {

/// Tie range of an existing edge: length of the shortest path between its
/// endpoints once the edge itself is removed (>= 2 by construction), or
/// nullopt when removal disconnects them. Throws std::invalid_argument if
/// (u, v) is not an edge.
std::optional<std::uint32_t> tie_range(const Graph& g, NodeId u, NodeId v);

/// Mutual-neighbor overlap M / (deg(u) + deg(v) - M - 2); nullopt when the
/// denominator is zero (isolated pendant-pendant edge). Lies in [0, 1] on
/// simple graphs whenever both endpoint degrees are >= 2.
std::optional<double> structural_tie_strength(const Graph& g, NodeId u, NodeId v);

enum class TieClass : std::uint8_t { weak = 0, medium = 1, strong = 2 };

struct TieTerciles {
  /// Per edge id: 0 weak / 1 medium / 2 strong, -1 for undefined strength.
  std::vector<std::int8_t> edge_class;
  std::array<std::size_t, 3> sizes{};
  std::size_t undefined_edges = 0;
};

/// Sorts defined-strength edges ascending (ties broken by edge id) and splits
/// them into thirds whose sizes differ by at most one, remainder assigned
/// low-to-high. Undefined-strength edges are excluded and counted. Throws
/// std::runtime_error with fewer than 3 defined-strength edges.
TieTerciles tie_strength_terciles(const Graph& g);

/// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double mean_clustering_coefficient(const Graph& g);

} // namespace ccflow
