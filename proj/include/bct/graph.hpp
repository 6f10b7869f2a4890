#ifndef BCT_GRAPH_HPP
#define BCT_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bct/bits.hpp"
#include "bct/error.hpp"

namespace bct {

// Immutable simple graph on at most 64 vertices. Vertices are string labels;
// indices follow sorted label order, so every iteration over vertices or
// edges is deterministic. Derived graphs are new values; labels survive
// induced subgraphs unchanged.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  static Graph build(std::vector<std::string> labels,
                     std::vector<std::pair<std::string, std::string>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  // -1 when the label is absent.
  int index_of(const std::string& label) const;
  int require_index(const std::string& label) const;

  bool has_edge(int u, int v) const { return has_bit(adj_[u], v); }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  Mask closed_neighborhood(int v) const { return adj_[v] | bit(v); }
  // N[uv] = N[u] ∪ N[v]
  Mask closed_neighborhood(int u, int v) const {
    return adj_[u] | adj_[v] | bit(u) | bit(v);
  }
  Mask vertex_mask() const { return full_mask(n_); }

  int min_degree() const;
  int max_degree() const;

  // Edges as index pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<std::string, std::string>> edge_labels() const;

  Graph induced(Mask keep) const;

  std::vector<std::string> labels_of(Mask m) const;
  Mask mask_of(const std::vector<std::string>& labels) const;

  bool connected() const;
  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;  // sorted
  std::vector<Mask> adj_;
};

// Graph together with a proper 2-coloring; left/right partition masks.
struct BipartiteGraph {
  Graph graph;
  Mask left = 0;
  Mask right = 0;

  bool on_left(int v) const { return has_bit(left, v); }
  std::vector<std::string> left_labels() const { return graph.labels_of(left); }
  std::vector<std::string> right_labels() const {
    return graph.labels_of(right);
  }
};

// 1-subdivision of a source graph. Edge vertices carry labels "u*v" with
// u < v; `origin` records, per vertex index of `graph`, where it came from.
struct SubdivisionGraph {
  struct Origin {
    bool is_edge_vertex = false;
    std::string u;  // original label, or first endpoint for edge vertices
    std::string v;  // second endpoint for edge vertices
  };

  Graph graph;
  Graph source;
  std::vector<Origin> origin;

  // Mask (in `graph`) of the vertices that subdivide edges.
  Mask edge_vertex_mask() const;
  // Mask (in `graph`) of the original vertices.
  Mask original_vertex_mask() const { return graph.vertex_mask() & ~edge_vertex_mask(); }
};

Graph build_graph(std::vector<std::string> labels,
                  std::vector<std::pair<std::string, std::string>> edges);

// Proper 2-coloring; Left goes to the least-labeled vertex of each
// component. Throws NotBipartiteError carrying an odd cycle.
BipartiteGraph bipartition(const Graph& g);
std::optional<BipartiteGraph> try_bipartition(
    const Graph& g, std::vector<std::string>* odd_cycle = nullptr);

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);

Graph delete_closed_neighborhood(const Graph& g, const std::string& vertex);
Graph delete_closed_neighborhood(const Graph& g, const std::string& u,
                                 const std::string& v);

SubdivisionGraph subdivide(const Graph& g);

// Pendant edge at every vertex of A; new labels get a "'" suffix.
Graph whisker(const Graph& g, const std::vector<std::string>& A);

Graph complement(const Graph& g);

// Labels are kept when the two label sets are disjoint; otherwise the
// right-hand labels get "~" appended until fresh.
Graph disjoint_union(const Graph& g1, const Graph& g2);

}  // namespace bct

#endif
