#include "bct/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bct {

Graph Graph::build(std::vector<std::string> labels,
                   std::vector<std::pair<std::string, std::string>> edges) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] == labels[i - 1])
      throw Error("duplicate vertex label '" + labels[i] + "'");
  if (static_cast<int>(labels.size()) > kMaxVertices)
    throw CapacityError("graph has " + std::to_string(labels.size()) +
                        " vertices; at most " + std::to_string(kMaxVertices) +
                        " supported");
  Graph g;
  g.n_ = static_cast<int>(labels.size());
  g.labels_ = std::move(labels);
  g.adj_.assign(g.n_, 0);
  for (const auto& [a, b] : edges) {
    int u = g.index_of(a);
    int v = g.index_of(b);
    if (u < 0) throw Error("edge endpoint '" + a + "' is not a vertex");
    if (v < 0) throw Error("edge endpoint '" + b + "' is not a vertex");
    if (u == v) throw Error("loop edge at '" + a + "'");
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

int Graph::require_index(const std::string& label) const {
  int v = index_of(label);
  if (v < 0) throw Error("unknown vertex '" + label + "'");
  return v;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : kMaxVertices + 1;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[u] & ~full_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [u, v] : edges()) out.emplace_back(labels_[u], labels_[v]);
  return out;
}

Graph Graph::induced(Mask keep) const {
  Graph g;
  std::vector<int> old_of;
  for_each_bit(keep, [&](int v) {
    g.labels_.push_back(labels_[v]);
    old_of.push_back(v);
  });
  g.n_ = static_cast<int>(g.labels_.size());
  g.adj_.assign(g.n_, 0);
  for (int i = 0; i < g.n_; ++i)
    for (int j = i + 1; j < g.n_; ++j)
      if (has_edge(old_of[i], old_of[j])) {
        g.adj_[i] |= bit(j);
        g.adj_[j] |= bit(i);
      }
  return g;
}

std::vector<std::string> Graph::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int v) { out.push_back(labels_[v]); });
  return out;
}

Mask Graph::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(require_index(l));
  return m;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  Mask seen = bit(0);
  Mask frontier = bit(0);
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertex_mask();
}

Graph build_graph(std::vector<std::string> labels,
                  std::vector<std::pair<std::string, std::string>> edges) {
  return Graph::build(std::move(labels), std::move(edges));
}

std::optional<BipartiteGraph> try_bipartition(const Graph& g,
                                              std::vector<std::string>* odd_cycle) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1), parent(n, -1);
  Mask left = 0, right = 0;
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      Mask nb = g.neighbors(u);
      bool clash = false;
      int clash_v = -1;
      for_each_bit(nb, [&](int v) {
        if (clash) return;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          clash = true;
          clash_v = v;
        }
      });
      if (clash) {
        if (odd_cycle) {
          // Walk both endpoints up to their lowest common ancestor.
          std::vector<int> up_u, up_v;
          for (int x = u; x >= 0; x = parent[x]) up_u.push_back(x);
          for (int x = clash_v; x >= 0; x = parent[x]) up_v.push_back(x);
          while (up_u.size() > 1 && up_v.size() > 1 &&
                 up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
            up_u.pop_back();
            up_v.pop_back();
          }
          std::vector<std::string> cycle;
          for (int x : up_u) cycle.push_back(g.label(x));
          for (std::size_t i = up_v.size() - 1; i >= 1; --i)
            cycle.push_back(g.label(up_v[i - 1]));
          odd_cycle->swap(cycle);
        }
        return std::nullopt;
      }
    }
  }
  for (int v = 0; v < n; ++v) (color[v] == 0 ? left : right) |= bit(v);
  return BipartiteGraph{g, left, right};
}

BipartiteGraph bipartition(const Graph& g) {
  std::vector<std::string> cycle;
  auto b = try_bipartition(g, &cycle);
  if (!b) throw NotBipartiteError(std::move(cycle));
  return *b;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
  return g.induced(g.mask_of(keep));
}

Graph delete_closed_neighborhood(const Graph& g, const std::string& vertex) {
  int v = g.require_index(vertex);
  return g.induced(g.vertex_mask() & ~g.closed_neighborhood(v));
}

Graph delete_closed_neighborhood(const Graph& g, const std::string& u,
                                 const std::string& v) {
  int a = g.require_index(u);
  int b = g.require_index(v);
  if (!g.has_edge(a, b))
    throw Error("'" + u + "' and '" + v + "' are not adjacent");
  return g.induced(g.vertex_mask() & ~g.closed_neighborhood(a, b));
}

SubdivisionGraph subdivide(const Graph& g) {
  if (g.vertex_count() + g.edge_count() > Graph::kMaxVertices)
    throw CapacityError("subdivision would have " +
                        std::to_string(g.vertex_count() + g.edge_count()) +
                        " vertices");
  std::vector<std::string> labels = g.labels();
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::pair<std::string, std::string>> edge_vertex;
  for (auto [a, b] : g.edge_labels()) {
    std::string ev = a + "*" + b;
    edge_vertex[ev] = {a, b};
    labels.push_back(ev);
    edges.emplace_back(a, ev);
    edges.emplace_back(b, ev);
  }
  SubdivisionGraph s;
  s.graph = Graph::build(std::move(labels), std::move(edges));
  s.source = g;
  s.origin.resize(s.graph.vertex_count());
  for (int v = 0; v < s.graph.vertex_count(); ++v) {
    auto it = edge_vertex.find(s.graph.label(v));
    if (it == edge_vertex.end()) {
      s.origin[v] = {false, s.graph.label(v), ""};
    } else {
      s.origin[v] = {true, it->second.first, it->second.second};
    }
  }
  return s;
}

Mask SubdivisionGraph::edge_vertex_mask() const {
  Mask m = 0;
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (origin[v].is_edge_vertex) m |= bit(v);
  return m;
}

Graph whisker(const Graph& g, const std::vector<std::string>& A) {
  std::vector<std::string> labels = g.labels();
  auto edges = g.edge_labels();
  std::set<std::string> seen(labels.begin(), labels.end());
  for (const auto& a : A) {
    g.require_index(a);
    std::string pendant = a + "'";
    while (seen.count(pendant)) pendant += "'";
    seen.insert(pendant);
    labels.push_back(pendant);
    edges.emplace_back(a, pendant);
  }
  return Graph::build(std::move(labels), std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(g.label(u), g.label(v));
  return Graph::build(g.labels(), std::move(edges));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::set<std::string> taken(g1.labels().begin(), g1.labels().end());
  std::vector<std::string> renamed = g2.labels();
  bool clash = false;
  for (auto& l : renamed)
    while (taken.count(l)) {
      l += "~";
      clash = true;
    }
  if (clash) {
    // Renaming one label may have collided with another renamed one.
    std::set<std::string> all(taken);
    for (auto& l : renamed) {
      while (all.count(l)) l += "~";
      all.insert(l);
    }
  }
  std::vector<std::string> labels = g1.labels();
  labels.insert(labels.end(), renamed.begin(), renamed.end());
  auto edges = g1.edge_labels();
  for (auto [u, v] : g2.edges())
    edges.emplace_back(renamed[u], renamed[v]);
  return Graph::build(std::move(labels), std::move(edges));
}

}  // namespace bct
