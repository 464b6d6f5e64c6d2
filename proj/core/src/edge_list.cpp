#include "ccflow/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ccflow {

LabeledGraph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> index_of;
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;

  const auto intern = [&](const std::string& name) {
    const auto [it, inserted] = index_of.try_emplace(name, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;
    if (a[0] == '#') continue;
    if (!(tokens >> b)) throw ParseError("expected two node names", line_no);
    if (tokens >> extra) throw ParseError("expected exactly two node names", line_no);
    const NodeId ia = intern(a);
    const NodeId ib = intern(b);
    edges.emplace_back(ia, ib);
  }

  GraphBuilder builder(static_cast<NodeId>(labels.size()));
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return {builder.build(), std::move(labels)};
}

LabeledGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge_endpoints(e);
    if (labels) {
      out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
    } else {
      out << u << ' ' << v << '\n';
    }
  }
}

} // namespace ccflow
