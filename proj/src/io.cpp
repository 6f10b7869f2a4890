#include "bct/io.hpp"

#include <sstream>

namespace bct {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

ParsedGraph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, char> sides;
  std::map<std::string, bool> declared;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() < 2 || tok.size() > 3)
        throw ParseError("expected 'v <label> [L|R]'", line_no);
      if (declared.count(tok[1]))
        throw ParseError("duplicate vertex '" + tok[1] + "'", line_no);
      declared[tok[1]] = true;
      labels.push_back(tok[1]);
      if (tok.size() == 3) {
        if (tok[2] != "L" && tok[2] != "R")
          throw ParseError("side must be L or R", line_no);
        sides[tok[1]] = tok[2][0];
      }
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError("expected 'e <label> <label>'", line_no);
      if (!declared.count(tok[1]))
        throw ParseError("unknown endpoint '" + tok[1] + "'", line_no);
      if (!declared.count(tok[2]))
        throw ParseError("unknown endpoint '" + tok[2] + "'", line_no);
      if (tok[1] == tok[2])
        throw ParseError("loop edge at '" + tok[1] + "'", line_no);
      edges.emplace_back(tok[1], tok[2]);
    } else {
      throw ParseError("unknown directive '" + tok[0] + "'", line_no);
    }
  }
  ParsedGraph out;
  out.graph = Graph::build(std::move(labels), std::move(edges));
  out.sides = std::move(sides);
  return out;
}

std::string write_graph_file(const Graph& g) {
  std::ostringstream out;
  for (const auto& l : g.labels()) out << "v " << l << "\n";
  for (const auto& [u, v] : g.edge_labels()) out << "e " << u << " " << v << "\n";
  return out.str();
}

std::string write_graph_file(const BipartiteGraph& b) {
  std::ostringstream out;
  for (int v = 0; v < b.graph.vertex_count(); ++v)
    out << "v " << b.graph.label(v) << " " << (b.on_left(v) ? "L" : "R") << "\n";
  for (const auto& [u, v] : b.graph.edge_labels())
    out << "e " << u << " " << v << "\n";
  return out.str();
}

}  // namespace bct
