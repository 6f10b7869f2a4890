#include "bct/topology.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "bct/bitrow.hpp"
#include "bct/parallel.hpp"

namespace bct {

bool SimplicialComplex::has_face(Mask f) const {
  return std::binary_search(faces.begin(), faces.end(), f);
}

int SimplicialComplex::dim() const {
  int d = -2;
  for (Mask f : faces) d = std::max(d, popcount(f) - 1);
  return d;
}

int SimplicialComplex::universe_index(const std::string& label) const {
  auto it = std::lower_bound(universe.begin(), universe.end(), label);
  if (it == universe.end() || *it != label)
    throw Error("'" + label + "' is not in the complex universe");
  return static_cast<int>(it - universe.begin());
}

SimplicialComplex make_complex(std::vector<std::string> universe,
                               std::vector<Mask> faces) {
  std::sort(universe.begin(), universe.end());
  for (std::size_t i = 1; i < universe.size(); ++i)
    if (universe[i] == universe[i - 1])
      throw Error("duplicate universe label '" + universe[i] + "'");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::unordered_set<Mask> present(faces.begin(), faces.end());
  Mask um = full_mask(static_cast<int>(universe.size()));
  for (Mask f : faces) {
    if (f & ~um) throw Error("face uses a vertex outside the universe");
    bool bad = false;
    for_each_bit(f, [&](int v) {
      if (!present.count(f & ~bit(v))) bad = true;
    });
    if (bad) throw Error("face family is not closed under subsets");
  }
  SimplicialComplex x;
  x.universe = std::move(universe);
  x.faces = std::move(faces);
  return x;
}

SimplicialComplex complex_from_facets(
    std::vector<std::string> universe,
    const std::vector<std::vector<std::string>>& facets) {
  std::sort(universe.begin(), universe.end());
  SimplicialComplex probe;
  probe.universe = universe;
  std::unordered_set<Mask> all;
  for (const auto& facet : facets) {
    Mask m = 0;
    for (const auto& l : facet) m |= bit(probe.universe_index(l));
    // every submask of m
    Mask s = m;
    while (true) {
      all.insert(s);
      if (s == 0) break;
      s = (s - 1) & m;
    }
  }
  std::vector<Mask> faces(all.begin(), all.end());
  std::sort(faces.begin(), faces.end());
  SimplicialComplex x;
  x.universe = std::move(universe);
  x.faces = std::move(faces);
  return x;
}

namespace {

using Levels = std::vector<std::vector<Mask>>;  // levels[k]: faces of size k

Levels group_by_popcount(const std::vector<Mask>& faces) {
  Levels levels;
  for (Mask f : faces) {
    int k = popcount(f);
    if (static_cast<int>(levels.size()) <= k) levels.resize(k + 1);
    levels[k].push_back(f);
  }
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

// Rank over GF(2) of the boundary map from cols (size-k faces) to rows
// (size-(k-1) faces). Both lists sorted.
int boundary_rank(const std::vector<Mask>& rows_faces,
                  const std::vector<Mask>& cols_faces) {
  if (rows_faces.empty() || cols_faces.empty()) return 0;
  int rcount = static_cast<int>(rows_faces.size());
  int ccount = static_cast<int>(cols_faces.size());
  std::vector<BitRow> rows(rcount, make_row(ccount));
  for (int j = 0; j < ccount; ++j) {
    Mask f = cols_faces[j];
    for_each_bit(f, [&](int v) {
      Mask sub = f & ~bit(v);
      auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
      rows[it - rows_faces.begin()][j >> 6] |= Mask{1} << (j & 63);
    });
  }
  std::vector<int> pivot_of_col(ccount, -1);
  int rank = 0;
  for (int i = 0; i < rcount; ++i) {
    int c;
    while ((c = row_first(rows[i])) >= 0 && pivot_of_col[c] >= 0)
      row_xor(rows[i], rows[pivot_of_col[c]]);
    if (c >= 0) {
      pivot_of_col[c] = i;
      ++rank;
    }
  }
  return rank;
}

// Largest dimension d >= floor_dim with nonzero reduced Betti number, or
// floor_dim - 1 when there is none. Ranks are evaluated top-down so lower
// boundary maps are never touched once a nonzero level is found.
int top_nonzero_dim(const Levels& levels, int floor_dim) {
  int kmax = static_cast<int>(levels.size()) - 1;
  if (kmax < 0) return floor_dim - 1;  // void
  int rank_above = 0;  // rank of boundary from size k+1
  for (int k = kmax; k - 1 >= floor_dim; --k) {
    int rank_here = k >= 1 ? boundary_rank(levels[k - 1], levels[k]) : 0;
    int betti = static_cast<int>(levels[k].size()) - rank_here - rank_above;
    if (betti != 0) return k - 1;
    rank_above = rank_here;
  }
  return floor_dim - 1;
}

// Smallest dimension with nonzero reduced Betti number, or -3 when all
// vanish (void complexes included).
int bottom_nonzero_dim(const Levels& levels) {
  int kmax = static_cast<int>(levels.size()) - 1;
  if (kmax < 0) return -3;
  int rank_below = 0;
  for (int k = 0; k <= kmax; ++k) {
    int rank_above =
        k + 1 <= kmax ? boundary_rank(levels[k], levels[k + 1]) : 0;
    int betti = static_cast<int>(levels[k].size()) - rank_below - rank_above;
    if (betti != 0) return k - 1;
    rank_below = rank_above;
  }
  return -3;
}

// All independent sets of g[alive], grouped by size; masks use host indices.
Levels independent_set_levels(const Graph& g, Mask alive) {
  Levels levels(popcount(alive) + 1);
  std::vector<std::pair<Mask, Mask>> stack;  // (current set, candidates)
  stack.emplace_back(0, alive);
  while (!stack.empty()) {
    auto [cur, cand] = stack.back();
    stack.pop_back();
    levels[popcount(cur)].push_back(cur);
    for_each_bit(cand, [&](int v) {
      stack.emplace_back(cur | bit(v),
                         cand & ~g.closed_neighborhood(v) & ~full_mask(v + 1));
    });
  }
  int top = static_cast<int>(levels.size()) - 1;
  while (top > 0 && levels[top].empty()) {
    levels.pop_back();
    --top;
  }
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

BettiTable betti_from_levels(const Levels& levels) {
  BettiTable bt;
  int kmax = static_cast<int>(levels.size()) - 1;
  if (kmax < 0) return bt;
  std::vector<int> rank(kmax + 2, 0);
  for (int k = 1; k <= kmax; ++k)
    rank[k] = boundary_rank(levels[k - 1], levels[k]);
  for (int k = 0; k <= kmax; ++k) {
    int betti = static_cast<int>(levels[k].size()) - rank[k] - rank[k + 1];
    if (betti != 0) bt.ranks[k - 1] = betti;
  }
  return bt;
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
  if (g.vertex_count() > 24)
    throw CapacityError("independence complex capped at 24 vertices");
  Levels levels = independent_set_levels(g, g.vertex_mask());
  std::vector<Mask> faces;
  for (const auto& level : levels)
    faces.insert(faces.end(), level.begin(), level.end());
  std::sort(faces.begin(), faces.end());
  SimplicialComplex x;
  x.universe = g.labels();
  x.faces = std::move(faces);
  return x;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x,
                                     const std::vector<std::string>& keep) {
  Mask keep_mask = 0;
  for (const auto& l : keep) keep_mask |= bit(x.universe_index(l));
  // compact remap
  std::vector<int> newpos(x.universe.size(), -1);
  std::vector<std::string> universe;
  for_each_bit(keep_mask, [&](int v) {
    newpos[v] = static_cast<int>(universe.size());
    universe.push_back(x.universe[v]);
  });
  std::vector<Mask> faces;
  for (Mask f : x.faces) {
    if (f & ~keep_mask) continue;
    Mask g = 0;
    for_each_bit(f, [&](int v) { g |= bit(newpos[v]); });
    faces.push_back(g);
  }
  std::sort(faces.begin(), faces.end());
  SimplicialComplex out;
  out.universe = std::move(universe);
  out.faces = std::move(faces);
  return out;
}

SimplicialComplex join_complex(const SimplicialComplex& a,
                               const SimplicialComplex& b) {
  for (const auto& l : a.universe)
    if (std::binary_search(b.universe.begin(), b.universe.end(), l))
      throw Error("join requires disjoint universes; '" + l + "' is shared");
  if (!a.faces.empty() && !b.faces.empty() &&
      a.faces.size() > (Mask{1} << 20) / b.faces.size())
    throw CapacityError("join would exceed 2^20 faces");
  std::vector<std::string> universe = a.universe;
  universe.insert(universe.end(), b.universe.begin(), b.universe.end());
  std::sort(universe.begin(), universe.end());
  auto remap = [&](const SimplicialComplex& src) {
    std::vector<int> pos(src.universe.size());
    for (std::size_t i = 0; i < src.universe.size(); ++i)
      pos[i] = static_cast<int>(
          std::lower_bound(universe.begin(), universe.end(), src.universe[i]) -
          universe.begin());
    std::vector<Mask> mapped;
    mapped.reserve(src.faces.size());
    for (Mask f : src.faces) {
      Mask g = 0;
      for_each_bit(f, [&](int v) { g |= bit(pos[v]); });
      mapped.push_back(g);
    }
    return mapped;
  };
  auto fa = remap(a);
  auto fb = remap(b);
  std::vector<Mask> faces;
  faces.reserve(fa.size() * fb.size());
  for (Mask f : fa)
    for (Mask g : fb) faces.push_back(f | g);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex out;
  out.universe = std::move(universe);
  out.faces = std::move(faces);
  return out;
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  auto fresh = [&](std::string base) {
    while (std::binary_search(x.universe.begin(), x.universe.end(), base))
      base += "~";
    return base;
  };
  std::string north = fresh("@N");
  std::string south = fresh("@S");
  SimplicialComplex s0;
  s0.universe = {north, south};
  std::sort(s0.universe.begin(), s0.universe.end());
  s0.faces = {0, 1, 2};
  return join_complex(s0, x);
}

SimplicialComplex alexander_dual(const SimplicialComplex& x) {
  int n = static_cast<int>(x.universe.size());
  if (n > 20) throw CapacityError("Alexander dual capped at 20 universe vertices");
  std::unordered_set<Mask> present(x.faces.begin(), x.faces.end());
  Mask um = full_mask(n);
  std::vector<Mask> faces;
  for (Mask a = 0; a <= um; ++a) {
    if (!present.count(um & ~a)) faces.push_back(a);
    if (a == um) break;
  }
  SimplicialComplex out;
  out.universe = x.universe;
  out.faces = std::move(faces);
  return out;
}

BettiTable reduced_betti_numbers(const SimplicialComplex& x) {
  if (x.faces.size() > (Mask{1} << 20))
    throw CapacityError("Betti computation capped at 2^20 faces");
  return betti_from_levels(group_by_popcount(x.faces));
}

int regularity(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) throw CapacityError("regularity scan capped at 20 vertices");
  int best = 0;  // S = ∅ gives nonzero homology in dimension -1
  for (int k = n; k >= 1; --k) {
    if (k <= best) break;  // j from an |S|=k subset is at most k
    std::vector<Mask> subsets;
    Mask s = full_mask(k);
    Mask limit = full_mask(n);
    while (s && s <= limit) {
      bool isolated = false;
      for_each_bit(s, [&](int v) {
        if (!isolated && (g.neighbors(v) & s) == 0) isolated = true;
      });
      if (!isolated) subsets.push_back(s);
      s = next_same_popcount(s);
    }
    if (subsets.empty()) continue;
    std::vector<int> local(worker_count(), best);
    parallel_chunks(subsets.size(), [&](int w, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Levels levels = independent_set_levels(g, subsets[i]);
        int d = top_nonzero_dim(levels, best);
        if (d >= best) local[w] = std::max(local[w], d + 1);
      }
    });
    for (int v : local) best = std::max(best, v);
  }
  return best;
}

int projective_dimension(const SimplicialComplex& x) {
  int n = static_cast<int>(x.universe.size());
  if (n > 16)
    throw CapacityError("projective dimension capped at 16 universe vertices");
  int best = 0;
  for (int k = n; k >= 0; --k) {
    if (k <= best - 1) break;  // |S| - d - 1 <= |S| for d >= -1
    Mask s = full_mask(k);
    Mask limit = full_mask(n);
    while (true) {
      std::vector<Mask> in;
      for (Mask f : x.faces)
        if ((f & ~s) == 0) in.push_back(f);
      if (!in.empty()) {
        int d = bottom_nonzero_dim(group_by_popcount(in));
        if (d > -3) best = std::max(best, k - d - 1);
      }
      if (k == 0) break;
      s = next_same_popcount(s);
      if (s == 0 || s > limit) break;
    }
  }
  return best;
}

bool csorba_check(const Graph& g) {
  if (g.vertex_count() + g.edge_count() > 20)
    throw CapacityError("Csorba check capped at 20 subdivision vertices");
  BettiTable lhs = reduced_betti_numbers(independence_complex(subdivide(g).graph));
  BettiTable rhs = reduced_betti_numbers(alexander_dual(independence_complex(g)));
  BettiTable shifted;
  for (auto [d, r] : rhs.ranks) shifted.ranks[d + 1] = r;
  return lhs == shifted;
}

std::vector<std::vector<std::string>> facets(const SimplicialComplex& x) {
  std::vector<std::vector<std::string>> out;
  int n = static_cast<int>(x.universe.size());
  for (Mask f : x.faces) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!has_bit(f, v) && x.has_face(f | bit(v))) maximal = false;
    if (maximal) {
      std::vector<std::string> labels;
      for_each_bit(f, [&](int v) { labels.push_back(x.universe[v]); });
      out.push_back(std::move(labels));
    }
  }
  return out;
}

}  // namespace bct
