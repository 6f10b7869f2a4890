#include "bct/structure.hpp"

#include <algorithm>

#include "bct/bitrow.hpp"

namespace bct {

std::optional<std::vector<int>> simple_chain_in(const Graph& g, Mask alive,
                                                int v) {
  std::vector<int> chain;
  for_each_bit(g.neighbors(v) & alive, [&](int u) { chain.push_back(u); });
  std::stable_sort(chain.begin(), chain.end(), [&](int a, int b) {
    return popcount(g.neighbors(a) & alive) < popcount(g.neighbors(b) & alive);
  });
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Mask small = g.neighbors(chain[i - 1]) & alive;
    Mask large = g.neighbors(chain[i]) & alive;
    if ((small & ~large) != 0) return std::nullopt;
  }
  return chain;
}

bool simple_vertex_in(const Graph& g, Mask alive, int v) {
  return simple_chain_in(g, alive, v).has_value();
}

std::optional<SimpleVertexWitness> is_simple_vertex(const Graph& g,
                                                    const std::string& v) {
  int idx = g.require_index(v);
  auto chain = simple_chain_in(g, g.vertex_mask(), idx);
  if (!chain) return std::nullopt;
  SimpleVertexWitness w;
  w.vertex = v;
  for (int u : *chain) w.neighbor_chain.push_back(g.label(u));
  return w;
}

bool bisimplicial_in(const Graph& g, Mask alive, int u, int v) {
  Mask s = g.closed_neighborhood(u, v) & alive;
  // G[s] must be connected, bipartite and have |P|*|Q| edges.
  int start = lowest_bit(s);
  std::vector<int> color(g.vertex_count(), -1);
  color[start] = 0;
  Mask seen = bit(start), frontier = bit(start);
  int part[2] = {1, 0};
  int edges_twice = 0;
  while (frontier) {
    Mask next = 0;
    bool odd = false;
    for_each_bit(frontier, [&](int x) {
      Mask nb = g.neighbors(x) & s;
      edges_twice += popcount(nb);
      for_each_bit(nb, [&](int y) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          ++part[color[y]];
          next |= bit(y);
        } else if (color[y] == color[x]) {
          odd = true;
        }
      });
    });
    if (odd) return false;
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != s) return false;  // disconnected
  // Unreached-degree counting never happens past this point.
  return edges_twice == 2 * part[0] * part[1];
}

bool is_bisimplicial_edge(const Graph& g, const std::string& u,
                          const std::string& v) {
  int a = g.require_index(u);
  int b = g.require_index(v);
  if (!g.has_edge(a, b))
    throw Error("'" + u + "' and '" + v + "' are not an edge");
  return bisimplicial_in(g, g.vertex_mask(), a, b);
}

bool is_chordal(const Graph& g) {
  Mask alive = g.vertex_mask();
  while (alive) {
    int found = -1;
    for_each_bit(alive, [&](int v) {
      if (found >= 0) return;
      Mask nb = g.neighbors(v) & alive;
      bool clique = true;
      for_each_bit(nb, [&](int u) {
        if (clique && (nb & ~bit(u) & ~g.neighbors(u)) != 0) clique = false;
      });
      if (clique) found = v;
    });
    if (found < 0) return false;
    alive &= ~bit(found);
  }
  return true;
}

namespace {

bool induced_cycle_dfs(const Graph& g, int v0, int last, int path_len,
                       Mask path, Mask blocked, int min_length) {
  Mask cand = g.neighbors(last) & ~path & ~blocked & ~full_mask(v0 + 1);
  bool found = false;
  for_each_bit(cand, [&](int x) {
    if (found) return;
    bool back_edge = has_bit(g.neighbors(v0), x);
    if (path_len >= 2 && back_edge) {
      if (path_len + 1 >= min_length) found = true;
      return;  // a chord to v0 forbids extending through x
    }
    Mask blocked2 = path_len >= 2 ? (blocked | g.neighbors(last)) : blocked;
    if (induced_cycle_dfs(g, v0, x, path_len + 1, path | bit(x), blocked2,
                          min_length))
      found = true;
  });
  return found;
}

}  // namespace

bool has_induced_cycle_at_least(const Graph& g, int min_length) {
  for (int s = 0; s < g.vertex_count(); ++s)
    if (induced_cycle_dfs(g, s, s, 1, bit(s), 0, min_length)) return true;
  return false;
}

bool is_chordal_bipartite(const Graph& g) {
  if (g.vertex_count() > 24)
    throw CapacityError("chordal bipartite recognition capped at 24 vertices");
  if (!try_bipartition(g)) return false;
  return !has_induced_cycle_at_least(g, 6);
}

std::optional<std::vector<std::string>> find_long_claw(const Graph& g) {
  int n = g.vertex_count();
  for (int c = 0; c < n; ++c) {
    Mask nbc = g.neighbors(c);
    if (popcount(nbc) < 3) continue;
    std::vector<int> nb;
    for_each_bit(nbc, [&](int v) { nb.push_back(v); });
    Mask closed_c = g.closed_neighborhood(c);
    int k = static_cast<int>(nb.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
          int a1 = nb[i], a2 = nb[j], a3 = nb[l];
          if (g.has_edge(a1, a2) || g.has_edge(a1, a3) || g.has_edge(a2, a3))
            continue;
          Mask c1 = g.neighbors(a1) & ~closed_c & ~g.neighbors(a2) & ~g.neighbors(a3);
          Mask c2 = g.neighbors(a2) & ~closed_c & ~g.neighbors(a1) & ~g.neighbors(a3);
          Mask c3 = g.neighbors(a3) & ~closed_c & ~g.neighbors(a1) & ~g.neighbors(a2);
          std::optional<std::vector<std::string>> hit;
          for_each_bit(c1, [&](int b1) {
            if (hit) return;
            Mask c2b = c2 & ~bit(b1) & ~g.neighbors(b1);
            for_each_bit(c2b, [&](int b2) {
              if (hit) return;
              Mask c3b = c3 & ~bit(b1) & ~bit(b2) & ~g.neighbors(b1) &
                         ~g.neighbors(b2);
              if (c3b) {
                int b3 = lowest_bit(c3b);
                hit = g.labels_of(bit(c) | bit(a1) | bit(a2) | bit(a3) |
                                  bit(b1) | bit(b2) | bit(b3));
              }
            });
          });
          if (hit) return hit;
        }
  }
  return std::nullopt;
}

namespace {

// Conflict graph over the edge list: two edges conflict when they cannot
// both sit in one induced matching.
struct EdgeConflicts {
  std::vector<std::pair<int, int>> edges;
  std::vector<BitRow> conflict;
  int m = 0;

  explicit EdgeConflicts(const Graph& g) {
    edges = g.edges();
    m = static_cast<int>(edges.size());
    conflict.assign(m, make_row(std::max(m, 1)));
    std::vector<Mask> reach(m);
    for (int i = 0; i < m; ++i) {
      auto [u, v] = edges[i];
      reach[i] = g.closed_neighborhood(u, v);
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        auto [u, v] = edges[j];
        if (has_bit(reach[i], u) || has_bit(reach[i], v)) {
          row_set(conflict[i], j);
          row_set(conflict[j], i);
        }
      }
  }
};

struct MisSearch {
  const EdgeConflicts& ec;
  int best = -1;
  BitRow best_set;

  explicit MisSearch(const EdgeConflicts& e) : ec(e) {}

  int pick(const BitRow& cand) const {
    int best_v = -1, best_deg = -1;
    row_for_each(cand, [&](int v) {
      BitRow t = ec.conflict[v];
      row_and(t, cand);
      int d = row_count(t);
      if (d > best_deg) {
        best_deg = d;
        best_v = v;
      }
    });
    return best_v;
  }

  void run(BitRow cand, BitRow cur, int size) {
    if (size + row_count(cand) <= best) return;
    if (!row_any(cand)) {
      if (size > best) {
        best = size;
        best_set = cur;
      }
      return;
    }
    int v = pick(cand);
    BitRow in = cand;
    row_andnot(in, ec.conflict[v]);
    row_reset(in, v);
    BitRow cur2 = cur;
    row_set(cur2, v);
    run(std::move(in), std::move(cur2), size + 1);
    row_reset(cand, v);
    run(std::move(cand), std::move(cur), size);
  }

  // Can `need` more pairwise-compatible edges be taken from cand?
  bool reaches(BitRow cand, int need) {
    if (need <= 0) return true;
    if (row_count(cand) < need) return false;
    int v = pick(cand);
    BitRow in = cand;
    row_andnot(in, ec.conflict[v]);
    row_reset(in, v);
    if (reaches(std::move(in), need - 1)) return true;
    row_reset(cand, v);
    return reaches(std::move(cand), need);
  }
};

}  // namespace

InducedMatchingNumber induced_matching_number(const Graph& g) {
  if (g.vertex_count() > 30)
    throw CapacityError("induced matching solver capped at 30 vertices");
  EdgeConflicts ec(g);
  InducedMatchingNumber out;
  if (ec.m == 0) return out;

  BitRow all = make_row(ec.m);
  for (int i = 0; i < ec.m; ++i) row_set(all, i);
  MisSearch search(ec);
  search.best = 0;
  search.run(all, make_row(ec.m), 0);
  out.size = search.best;

  // Lexicographically least witness: force edges in sorted order whenever
  // the optimum stays reachable using later edges only.
  BitRow forced = make_row(ec.m);
  BitRow compat = all;
  int taken = 0;
  for (int e = 0; e < ec.m && taken < out.size; ++e) {
    if (!row_test(compat, e)) continue;
    BitRow rest = compat;
    row_andnot(rest, ec.conflict[e]);
    for (int i = 0; i <= e; ++i) row_reset(rest, i);
    MisSearch probe(ec);
    probe.best = 0;
    if (probe.reaches(rest, out.size - taken - 1)) {
      row_set(forced, e);
      ++taken;
      compat = rest;
    }
  }
  row_for_each(forced, [&](int e) {
    auto [u, v] = ec.edges[e];
    out.witness.edges.emplace_back(g.label(u), g.label(v));
  });
  return out;
}

bool is_induced_matching(
    const Graph& g,
    const std::vector<std::pair<std::string, std::string>>& matching) {
  std::vector<std::pair<int, int>> m;
  for (const auto& [a, b] : matching) {
    int u = g.require_index(a);
    int v = g.require_index(b);
    if (!g.has_edge(u, v))
      throw Error("'" + a + "' and '" + b + "' are not an edge");
    m.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Mask a = bit(m[i].first) | bit(m[i].second);
      Mask b = bit(m[j].first) | bit(m[j].second);
      if (a & b) return false;
      Mask reach = g.neighbors(m[i].first) | g.neighbors(m[i].second);
      if (reach & b) return false;
    }
  return true;
}

}  // namespace bct
