#ifndef BCT_IO_HPP
#define BCT_IO_HPP

#include <map>
#include <string>

#include "bct/graph.hpp"

namespace bct {

// Line format: '#' comments, "v <label> [L|R]" and "e <label> <label>".
// The writer emits vertices sorted, then edges sorted, so write∘parse is a
// canonical form.

struct ParsedGraph {
  Graph graph;
  std::map<std::string, char> sides;  // 'L' or 'R' for annotated vertices
};

ParsedGraph parse_graph_file(const std::string& text);

std::string write_graph_file(const Graph& g);
std::string write_graph_file(const BipartiteGraph& b);

}  // namespace bct

#endif
