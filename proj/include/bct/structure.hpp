#ifndef BCT_STRUCTURE_HPP
#define BCT_STRUCTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// Witness that `vertex` is simple: its neighbors listed so that each one's
// neighborhood is contained in the next one's.
struct SimpleVertexWitness {
  std::string vertex;
  std::vector<std::string> neighbor_chain;
};

struct InducedMatching {
  std::vector<std::pair<std::string, std::string>> edges;  // sorted pairs
};

std::optional<SimpleVertexWitness> is_simple_vertex(const Graph& g,
                                                    const std::string& v);

bool is_bisimplicial_edge(const Graph& g, const std::string& u,
                          const std::string& v);

// Perfect-elimination-ordering search; any simplicial vertex may be removed.
bool is_chordal(const Graph& g);

// Bipartite with no induced cycle of length six or more. Exponential
// induced-path enumeration, capped at 24 vertices.
bool is_chordal_bipartite(const Graph& g);

// A 7-vertex set inducing S(K_{1,3}), searched by center enumeration.
std::optional<std::vector<std::string>> find_long_claw(const Graph& g);

struct InducedMatchingNumber {
  int size = 0;
  InducedMatching witness;  // lexicographically least among maxima
};

InducedMatchingNumber induced_matching_number(const Graph& g);

bool is_induced_matching(
    const Graph& g,
    const std::vector<std::pair<std::string, std::string>>& matching);

// Mask-level forms evaluated on the induced subgraph G[alive]; shared with
// the elimination machinery.
bool simple_vertex_in(const Graph& g, Mask alive, int v);
std::optional<std::vector<int>> simple_chain_in(const Graph& g, Mask alive,
                                                int v);
bool bisimplicial_in(const Graph& g, Mask alive, int u, int v);

// Existence of an induced (chordless) cycle with >= min_length vertices.
bool has_induced_cycle_at_least(const Graph& g, int min_length);

}  // namespace bct

#endif
