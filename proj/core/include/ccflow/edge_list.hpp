#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccflow/graph.hpp"

namespace ccflow {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LabeledGraph {
  Graph graph;
  /// labels[index] = node name from the input, in order of first appearance.
  std::vector<std::string> labels;
};

/// Reads whitespace-separated "name name" pairs, one edge per line.
/// Lines starting with '#' and blank lines are ignored. Node names are
/// arbitrary strings and get dense indices in order of first appearance;
/// duplicate and reversed edges collapse, self-loops are dropped.
/// A line with a token count other than 2 raises ParseError with its number.
LabeledGraph load_edge_list(std::istream& in);
LabeledGraph load_edge_list_file(const std::string& path);

/// Writes one edge per line. With labels, names are used; otherwise indices.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels = nullptr);

} // namespace ccflow
