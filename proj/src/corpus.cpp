#include "bct/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

#include "bct/families.hpp"
#include "bct/structure.hpp"

namespace bct {

namespace {

// Iterated degree refinement; returns a color per vertex such that the
// multiset of colors (and the classes they cut) is isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      for_each_bit(g.neighbors(v), [&](int u) { s.push_back(color[u]); });
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sorted)
      if (!rank.count(s)) rank[s] = static_cast<int>(rank.size());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = rank[sig[v].first];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::uint64_t encode_order(const Graph& g, const std::vector<int>& order) {
  std::uint64_t bits = 0;
  int pos = 0;
  int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++pos)
      if (g.has_edge(order[i], order[j])) bits |= std::uint64_t{1} << pos;
  return bits;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10) throw CapacityError("canonical key capped at 10 vertices");
  if (n == 0) return 0;
  std::vector<int> color = refine_colors(g);
  std::vector<std::vector<int>> classes;
  {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    for (auto& [c, vs] : by_color) classes.push_back(std::move(vs));
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> order;
  order.reserve(n);
  while (true) {
    order.clear();
    for (const auto& cls : classes) order.insert(order.end(), cls.begin(), cls.end());
    best = std::min(best, encode_order(g, order));
    std::size_t c = 0;
    while (c < classes.size() &&
           !std::next_permutation(classes[c].begin(), classes[c].end()))
      ++c;
    if (c == classes.size()) break;
  }
  // up to C(10,2) = 45 encoding bits below the vertex count
  return (std::uint64_t{static_cast<std::uint64_t>(n)} << 48) | best;
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                    Mask used_b, int next) {
  int n = a.vertex_count();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (has_bit(used_b, cand)) continue;
    if (a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.has_edge(prev, next) != b.has_edge(map_ab[prev], cand)) ok = false;
    if (!ok) continue;
    map_ab[next] = cand;
    if (extend_mapping(a, b, map_ab, used_b | bit(cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map_ab(a.vertex_count(), -1);
  return a.vertex_count() == 0 || extend_mapping(a, b, map_ab, 0, 0);
}

namespace {

Graph extend_with_vertex(const Graph& parent, Mask neighborhood) {
  int n = parent.vertex_count();
  std::vector<std::string> labels;
  for (int v = 1; v <= n + 1; ++v) labels.push_back("v" + zero_pad2(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : parent.edges()) edges.emplace_back(labels[u], labels[v]);
  for_each_bit(neighborhood, [&](int u) { edges.emplace_back(labels[u], labels[n]); });
  return Graph::build(std::move(labels), std::move(edges));
}

std::vector<Graph> enumerate_by_extension(
    int max_vertices, const std::function<bool(const Graph&)>& prune_class) {
  std::vector<Graph> out;
  std::vector<Graph> level{Graph{}};
  if (!prune_class || prune_class(level[0])) out.push_back(level[0]);
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<std::uint64_t, Graph>> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& parent : level) {
      Mask all = full_mask(n - 1);
      for (Mask nb = 0;; ++nb) {
        Graph child = extend_with_vertex(parent, nb);
        if (!prune_class || prune_class(child)) {
          std::uint64_t key = canonical_key(child);
          if (seen.insert(key).second) next.emplace_back(key, std::move(child));
        }
        if (nb == all) break;
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_small_graphs(
    int max_vertices, const std::function<bool(const Graph&)>& filter) {
  if (max_vertices > 8)
    throw CapacityError("exhaustive graph enumeration capped at 8 vertices");
  auto all = enumerate_by_extension(max_vertices, nullptr);
  if (!filter) return all;
  std::vector<Graph> out;
  for (auto& g : all)
    if (filter(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_hereditary_class(
    int max_vertices, const std::function<bool(const Graph&)>& hereditary) {
  if (max_vertices > 10)
    throw CapacityError("hereditary enumeration capped at 10 vertices");
  return enumerate_by_extension(max_vertices, hereditary);
}

std::vector<Graph> random_chordal_bipartite(const RandomCorpusSpec& spec) {
  if (spec.n_left + spec.n_right > 24)
    throw CapacityError("random bipartite corpus capped at 24 vertices");
  if (spec.n_left < 0 || spec.n_right < 0 || spec.count < 0)
    throw Error("corpus spec needs nonnegative sizes");
  std::vector<Graph> out;
  for (int instance = 0; instance < spec.count; ++instance) {
    std::mt19937_64 rng(spec.seed + 0x9E3779B97F4A7C15ULL *
                                        static_cast<std::uint64_t>(instance + 1));
    std::vector<std::string> labels;
    for (int i = 1; i <= spec.n_left; ++i) labels.push_back("a" + zero_pad2(i));
    for (int j = 1; j <= spec.n_right; ++j) labels.push_back("b" + zero_pad2(j));
    std::vector<std::pair<std::string, std::string>> candidates;
    for (int i = 1; i <= spec.n_left; ++i)
      for (int j = 1; j <= spec.n_right; ++j)
        candidates.emplace_back("a" + zero_pad2(i), "b" + zero_pad2(j));
    for (std::size_t k = candidates.size(); k > 1; --k)
      std::swap(candidates[k - 1], candidates[rng() % k]);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& cand : candidates) {
      if (static_cast<int>(edges.size()) >= spec.edge_budget) break;
      edges.push_back(cand);
      Graph attempt = Graph::build(labels, edges);
      bool keep = true;
      switch (spec.class_filter) {
        case RandomCorpusSpec::ClassFilter::Any:
          break;
        case RandomCorpusSpec::ClassFilter::ChordalBipartite:
          keep = is_chordal_bipartite(attempt);
          break;
        case RandomCorpusSpec::ClassFilter::LongClawFree:
          keep = !find_long_claw(attempt).has_value();
          break;
      }
      if (!keep) edges.pop_back();
    }
    out.push_back(Graph::build(labels, edges));
  }
  return out;
}

}  // namespace bct
