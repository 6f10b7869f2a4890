#include "bct/invariants.hpp"

#include <algorithm>
#include <functional>

#include "bct/families.hpp"
#include "bct/structure.hpp"

namespace bct {

namespace {

// Exact set cover by closed neighborhoods.
struct DominationSearch {
  const Graph& g;
  int best;
  std::vector<int> best_set, cur;

  explicit DominationSearch(const Graph& graph)
      : g(graph), best(graph.vertex_count() + 1) {}

  int cover_bound(Mask uncovered) const {
    int widest = 0;
    for (int a = 0; a < g.vertex_count(); ++a)
      widest = std::max(widest, popcount(g.closed_neighborhood(a) & uncovered));
    if (widest == 0) return best + 1;  // uncoverable
    return (popcount(uncovered) + widest - 1) / widest;
  }

  void run(Mask uncovered) {
    if (!uncovered) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_set = cur;
      }
      return;
    }
    if (static_cast<int>(cur.size()) + cover_bound(uncovered) >= best) return;
    int t = lowest_bit(uncovered);
    for (int a = 0; a < g.vertex_count(); ++a) {
      if (!has_bit(g.closed_neighborhood(a), t)) continue;
      cur.push_back(a);
      run(uncovered & ~g.closed_neighborhood(a));
      cur.pop_back();
    }
  }

  // Does a cover of size <= budget exist using vertices >= min_vertex?
  bool feasible(Mask uncovered, int budget, int min_vertex) {
    if (!uncovered) return true;
    if (budget <= 0) return false;
    int widest = 0;
    for (int a = min_vertex; a < g.vertex_count(); ++a)
      widest = std::max(widest, popcount(g.closed_neighborhood(a) & uncovered));
    if (widest == 0 || (popcount(uncovered) + widest - 1) / widest > budget)
      return false;
    int t = lowest_bit(uncovered);
    for (int a = min_vertex; a < g.vertex_count(); ++a) {
      if (!has_bit(g.closed_neighborhood(a), t)) continue;
      if (feasible(uncovered & ~g.closed_neighborhood(a), budget - 1, min_vertex))
        return true;
    }
    return false;
  }
};

}  // namespace

DominationResult domination_number(const Graph& g,
                                   const std::vector<std::string>& targets) {
  if (g.vertex_count() > 30)
    throw CapacityError("domination solver capped at 30 vertices");
  Mask want = g.mask_of(targets);
  DominationSearch search(g);
  search.run(want);

  DominationResult out;
  out.size = search.best;
  // Lexicographically least witness among minimum covers.
  Mask uncovered = want;
  int from = 0;
  for (int taken = 0; taken < out.size;) {
    for (int a = from; a < g.vertex_count(); ++a) {
      Mask rest = uncovered & ~g.closed_neighborhood(a);
      if (search.feasible(rest, out.size - taken - 1, a + 1)) {
        out.witness.push_back(g.label(a));
        uncovered = rest;
        from = a + 1;
        ++taken;
        break;
      }
    }
  }
  return out;
}

DominationResult domination_number(const Graph& g) {
  return domination_number(g, g.labels());
}

namespace {

// Enumerates maximal independent sets (maximal cliques of the complement)
// and evaluates the domination number of each. γ(I,g) is monotone under
// set inclusion, so maximal sets suffice.
void maximal_independent_sets(const Graph& g, Mask r, Mask p, Mask x,
                              const std::function<void(Mask)>& sink) {
  if (!p && !x) {
    sink(r);
    return;
  }
  Mask px = p | x;
  int pivot = -1, best = -1;
  for_each_bit(px, [&](int u) {
    Mask nonnb = p & ~g.neighbors(u) & ~bit(u);
    if (popcount(nonnb) > best) {
      best = popcount(nonnb);
      pivot = u;
    }
  });
  Mask branch = p & ~(~g.neighbors(pivot) & ~bit(pivot));
  branch |= p & bit(pivot);
  for_each_bit(branch, [&](int v) {
    Mask keep = ~g.neighbors(v) & ~bit(v);
    maximal_independent_sets(g, r | bit(v), p & keep, x & keep, sink);
    p &= ~bit(v);
    x |= bit(v);
  });
}

}  // namespace

IndependenceDominationResult independence_domination_number(const Graph& g) {
  if (g.vertex_count() > 24)
    throw CapacityError("independence domination capped at 24 vertices");
  IndependenceDominationResult out;
  if (g.vertex_count() == 0) return out;
  maximal_independent_sets(g, 0, g.vertex_mask(), 0, [&](Mask independent) {
    auto gamma = domination_number(g, g.labels_of(independent));
    if (gamma.size > out.size) {
      out.size = gamma.size;
      out.witness_set = g.labels_of(independent);
    }
  });
  return out;
}

std::optional<BicliqueBlock> is_biclique_set(const Graph& g,
                                             const std::vector<std::string>& W) {
  if (W.empty()) throw Error("biclique test needs a nonempty vertex set");
  Mask w = g.mask_of(W);
  if (popcount(w) == 1) return BicliqueBlock{g.labels_of(w), {}};
  // W splits into a biclique iff the complement of G[W] is disconnected;
  // one complement component against the rest gives a valid split.
  int start = lowest_bit(w);
  Mask comp = bit(start), frontier = bit(start);
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= ~g.neighbors(v) & w & ~bit(v); });
    frontier = next & ~comp;
    comp |= next;
  }
  if (comp == w) return std::nullopt;
  return BicliqueBlock{g.labels_of(comp), g.labels_of(w & ~comp)};
}

VerifyPartitionResult verify_biclique_partition(const Graph& g,
                                                const BicliquePartition& p) {
  Mask covered = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& b = p.blocks[i];
    std::string tag = "block " + std::to_string(i + 1);
    Mask left = 0, right = 0;
    try {
      left = g.mask_of(b.left);
      right = g.mask_of(b.right);
    } catch (const Error& e) {
      return {false, tag + ": " + e.what()};
    }
    if (left & right) return {false, tag + ": parts overlap"};
    if (left == 0 && right == 0) return {false, tag + ": empty"};
    if (right == 0 && popcount(left) != 1)
      return {false, tag + ": one-sided block is not a singleton"};
    if (left == 0) return {false, tag + ": left part empty"};
    bool complete = true;
    for_each_bit(left, [&](int u) {
      if ((right & ~g.neighbors(u)) != 0) complete = false;
    });
    if (!complete) return {false, tag + ": missing cross edge"};
    Mask all = left | right;
    if (all & covered) return {false, tag + ": overlaps an earlier block"};
    covered |= all;
  }
  if (covered != g.vertex_mask()) return {false, "blocks do not cover every vertex"};
  return {};
}

namespace {

struct BlockCandidate {
  Mask left, right;
  Mask all() const { return left | right; }
};

struct BpSearch {
  const Graph& g;
  bool singletons;
  int best;
  bool found = false;
  std::vector<BlockCandidate> cur, best_blocks;
  int size_cap;  // upper bound on any block size

  BpSearch(const Graph& graph, bool allow_singletons)
      : g(graph), singletons(allow_singletons), best(graph.vertex_count() + 1) {
    size_cap = singletons ? 1 : 0;
    for (auto [u, v] : g.edges())
      size_cap = std::max(size_cap, g.degree(u) + g.degree(v));
  }

  std::vector<BlockCandidate> candidates(Mask uncovered) const {
    int v = lowest_bit(uncovered);
    std::vector<BlockCandidate> out;
    Mask nb = g.neighbors(v) & uncovered;
    Mask r = nb;
    while (r) {  // nonempty submasks of nb
      Mask common = 0;
      for_each_bit(uncovered & ~r, [&](int u) {
        if ((r & ~g.neighbors(u)) == 0) common |= bit(u);
      });
      // left parts: submasks of common containing v
      Mask rest = common & ~bit(v);
      Mask l = rest;
      while (true) {
        out.push_back({l | bit(v), r});
        if (l == 0) break;
        l = (l - 1) & rest;
      }
      r = (r - 1) & nb;
    }
    if (singletons) out.push_back({bit(v), 0});
    std::sort(out.begin(), out.end(), [](const BlockCandidate& a,
                                         const BlockCandidate& b) {
      int pa = popcount(a.all()), pb = popcount(b.all());
      if (pa != pb) return pa > pb;
      if (a.all() != b.all()) return a.all() < b.all();
      return a.left < b.left;
    });
    return out;
  }

  void run(Mask uncovered) {
    if (!uncovered) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_blocks = cur;
        found = true;
      }
      return;
    }
    int lower = size_cap == 0 ? best + 1
                              : (popcount(uncovered) + size_cap - 1) / size_cap;
    if (static_cast<int>(cur.size()) + lower >= best) return;
    for (const auto& cand : candidates(uncovered)) {
      cur.push_back(cand);
      run(uncovered & ~cand.all());
      cur.pop_back();
    }
  }

  // Greedy prime: largest candidate block at the least uncovered vertex.
  void prime() {
    Mask uncovered = g.vertex_mask();
    std::vector<BlockCandidate> blocks;
    while (uncovered) {
      auto cands = candidates(uncovered);
      if (cands.empty()) return;  // infeasible without singletons
      blocks.push_back(cands.front());
      uncovered &= ~cands.front().all();
    }
    best = static_cast<int>(blocks.size());
    best_blocks = std::move(blocks);
    found = true;
  }
};

}  // namespace

BicliquePartitionResult biclique_partition_number(const Graph& g,
                                                  bool allow_singletons) {
  if (g.vertex_count() > 16)
    throw CapacityError("biclique partition solver capped at 16 vertices");
  BicliquePartitionResult out;
  if (g.vertex_count() == 0) return out;
  BpSearch search(g, allow_singletons);
  search.prime();
  search.best += 1;  // let the exact search rediscover the greedy bound
  search.run(g.vertex_mask());
  if (!search.found) {
    out.feasible = false;
    out.size = -1;
    return out;
  }
  out.size = search.best;
  for (const auto& b : search.best_blocks)
    out.witness.blocks.push_back(
        {g.labels_of(b.left), g.labels_of(b.right)});
  return out;
}

CochordalCover cochordal_cover_for_subdivided_biclique(int n, int m) {
  if (n < 1 || m < 1) throw Error("S(K_{n,m}) cover needs n, m >= 1");
  auto x = [](int i) { return "x" + zero_pad2(i); };
  auto y = [](int j) { return "y" + zero_pad2(j); };
  auto e = [&](int i, int j) { return x(i) + "*" + y(j); };
  CochordalCover cover;
  for (int j = 1; j <= m; ++j) {
    std::vector<std::pair<std::string, std::string>> star;
    for (int i = 1; i <= n; ++i) star.emplace_back(y(j), e(i, j));
    star.emplace_back(e(1, j), x(1));
    cover.subgraphs.push_back(std::move(star));
  }
  for (int i = 2; i <= n; ++i) {
    std::vector<std::pair<std::string, std::string>> star;
    for (int j = 1; j <= m; ++j) star.emplace_back(x(i), e(i, j));
    cover.subgraphs.push_back(std::move(star));
  }
  return cover;
}

bool verify_cochordal_cover(const Graph& g, const CochordalCover& cover) {
  std::vector<std::pair<int, int>> host_edges = g.edges();
  std::vector<bool> hit(host_edges.size(), false);
  for (const auto& member : cover.subgraphs) {
    Mask incident = 0;
    for (const auto& [a, b] : member) {
      int u = g.require_index(a);
      int v = g.require_index(b);
      if (!g.has_edge(u, v))
        throw Error("cover lists a non-edge '" + a + "' - '" + b + "'");
      incident |= bit(u) | bit(v);
      auto key = std::make_pair(std::min(u, v), std::max(u, v));
      auto it = std::lower_bound(host_edges.begin(), host_edges.end(), key);
      hit[it - host_edges.begin()] = true;
    }
    if (!is_chordal(complement(g.induced(incident)))) return false;
  }
  for (bool h : hit)
    if (!h) return false;
  return true;
}

}  // namespace bct
