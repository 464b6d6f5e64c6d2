#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ccflow {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable undirected simple graph with contiguous node indices.
///
/// Adjacency lists are sorted and symmetric; edges are stored once in
/// canonical (low, high) orientation and carry stable ids so per-direction
/// quantities can be indexed as 2*e (low->high) and 2*e+1 (high->low).
/// Safe for concurrent reads after construction.
class Graph {
 public:
  Graph() = default;

  NodeId node_count() const { return node_count_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }
  std::span<const EdgeId> incident_edge_ids(NodeId u) const {
    return {adj_edge_.data() + offsets_[u], adj_edge_.data() + offsets_[u + 1]};
  }
  NodeId degree(NodeId u) const {
    return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]);
  }

  /// Endpoints of edge e in canonical orientation (first < second).
  std::pair<NodeId, NodeId> edge_endpoints(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  /// Index into a 2*edge_count array of per-direction values.
  std::size_t directed_slot(EdgeId e, NodeId from) const {
    return 2 * static_cast<std::size_t>(e) + (from == edges_[e].first ? 0 : 1);
  }
  std::size_t directed_slot_count() const { return 2 * edges_.size(); }

 private:
  friend class GraphBuilder;
  NodeId node_count_ = 0;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<EdgeId> adj_edge_;
};

/// Collects edges, then builds a Graph. Self-loops are dropped and
/// duplicate/reversed edges collapse to one undirected edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(NodeId node_count) : node_count_(node_count) {}

  void add_edge(NodeId u, NodeId v);
  Graph build();

 private:
  NodeId node_count_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Throws std::logic_error if the graph violates its structural invariants
/// (sorted symmetric adjacency, no self-loops or parallel edges, canonical
/// edge table). Used as a construction audit in tests.
void validate_graph(const Graph& g);

/// Connected component label per node (labels are dense, assigned in order
/// of each component's smallest node index) plus the component count.
std::vector<NodeId> connected_components(const Graph& g, NodeId* component_count);

struct GiantComponentResult {
  Graph graph;
  /// original_nodes[new_index] = index in the input graph.
  std::vector<NodeId> original_nodes;
};

/// Subgraph induced by the largest connected component, re-indexed.
/// Size ties go to the component containing the smallest original index.
/// An empty graph maps to an empty graph.
GiantComponentResult giant_component_mapped(const Graph& g);
Graph giant_component(const Graph& g);

/// Subgraph induced by the given (sorted, unique) node set, re-indexed.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

} // namespace ccflow
