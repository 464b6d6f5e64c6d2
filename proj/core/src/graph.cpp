#include "ccflow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccflow {

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (u >= node_count_ || v >= node_count_ || u == v) return std::nullopt;
  // Scan the smaller adjacency list.
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edge_ids(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

void GraphBuilder::add_edge(NodeId u, NodeId v) {
  if (u >= node_count_ || v >= node_count_)
    throw std::invalid_argument("GraphBuilder::add_edge: node index out of range");
  if (u == v) return;
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  Graph g;
  g.node_count_ = node_count_;
  g.edges_ = std::move(edges_);
  edges_.clear();

  std::vector<std::size_t> deg(node_count_ + 1, 0);
  for (const auto& [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(node_count_ + 1, 0);
  for (NodeId i = 0; i < node_count_; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];

  g.adj_.resize(g.offsets_[node_count_]);
  g.adj_edge_.resize(g.offsets_[node_count_]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adj_[cursor[u]] = v;
    g.adj_edge_[cursor[u]++] = e;
    g.adj_[cursor[v]] = u;
    g.adj_edge_[cursor[v]++] = e;
  }
  // Edge table is sorted, so each adjacency list came out sorted as well.
  return g;
}

void validate_graph(const Graph& g) {
  const NodeId n = g.node_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge_endpoints(e);
    if (u >= v || v >= n) throw std::logic_error("validate_graph: bad edge endpoints");
  }
  std::size_t half_edges = 0;
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    half_edges += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == u) throw std::logic_error("validate_graph: self-loop");
      if (i > 0 && nbrs[i - 1] >= nbrs[i])
        throw std::logic_error("validate_graph: adjacency not sorted/unique");
      const auto back = g.neighbors(nbrs[i]);
      if (!std::binary_search(back.begin(), back.end(), u))
        throw std::logic_error("validate_graph: adjacency not symmetric");
      const EdgeId e = g.incident_edge_ids(u)[i];
      const auto [a, b] = g.edge_endpoints(e);
      if (!((a == u && b == nbrs[i]) || (a == nbrs[i] && b == u)))
        throw std::logic_error("validate_graph: edge id mismatch");
    }
  }
  if (half_edges != 2 * static_cast<std::size_t>(g.edge_count()))
    throw std::logic_error("validate_graph: degree sum != 2|E|");
}

std::vector<NodeId> connected_components(const Graph& g, NodeId* component_count) {
  const NodeId n = g.node_count();
  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> label(n, kUnset);
  std::vector<NodeId> queue;
  NodeId next_label = 0;
  for (NodeId start = 0; start < n; ++start) {
    if (label[start] != kUnset) continue;
    label[start] = next_label;
    queue.assign(1, start);
    while (!queue.empty()) {
      const NodeId u = queue.back();
      queue.pop_back();
      for (const NodeId v : g.neighbors(u)) {
        if (label[v] == kUnset) {
          label[v] = next_label;
          queue.push_back(v);
        }
      }
    }
    ++next_label;
  }
  if (component_count) *component_count = next_label;
  return label;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.node_count(), kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) remap[nodes[i]] = static_cast<NodeId>(i);
  GraphBuilder builder(static_cast<NodeId>(nodes.size()));
  for (const auto& [u, v] : g.edges()) {
    if (remap[u] != kAbsent && remap[v] != kAbsent) builder.add_edge(remap[u], remap[v]);
  }
  return builder.build();
}

GiantComponentResult giant_component_mapped(const Graph& g) {
  GiantComponentResult result;
  if (g.node_count() == 0) {
    result.graph = GraphBuilder(0).build();
    return result;
  }
  NodeId count = 0;
  const auto label = connected_components(g, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (const NodeId l : label) ++sizes[l];
  // Labels are assigned in order of smallest contained index, so the first
  // maximal component wins size ties.
  NodeId best = 0;
  for (NodeId l = 1; l < count; ++l) {
    if (sizes[l] > sizes[best]) best = l;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label[v] == best) result.original_nodes.push_back(v);
  }
  result.graph = induced_subgraph(g, result.original_nodes);
  return result;
}

Graph giant_component(const Graph& g) { return giant_component_mapped(g).graph; }

} // namespace ccflow
