#include <doctest.h>

#include "bct/corpus.hpp"
#include "bct/families.hpp"
#include "bct/invariants.hpp"
#include "bct/structure.hpp"
#include "bct/topology.hpp"
#include "oracles.hpp"

using namespace bct;

TEST_CASE("domination number") {
  CHECK(domination_number(cycle_graph(4)).size == 2);
  CHECK(domination_number(fig2_graph()).size == 3);
  CHECK(domination_number(family_r(4, 2)).size == 4);
  CHECK(domination_number(Graph{}).size == 0);

  // targeted domination
  Graph p4 = path_graph(4);
  auto partial = domination_number(p4, {"p01"});
  CHECK(partial.size == 1);
  CHECK(partial.witness == std::vector<std::string>{"p01"});
}

TEST_CASE("domination matches the subset oracle with least witnesses") {
  for (const Graph& g : enumerate_small_graphs(6)) {
    auto got = domination_number(g);
    auto want = oracle::brute_domination(g, g.labels());
    CHECK(got.size == want.first);
    CHECK(got.witness == want.second);
  }
}

TEST_CASE("independence domination") {
  CHECK(independence_domination_number(complete_bipartite(2, 3)).size == 1);
  CHECK(independence_domination_number(fig2_graph()).size == 2);
  CHECK(independence_domination_number(
            disjoint_union(fig2_graph(), cycle_graph(4)))
            .size == 3);
  for (const Graph& g : enumerate_small_graphs(6))
    CHECK(independence_domination_number(g).size ==
          oracle::brute_independence_domination(g));
}

TEST_CASE("biclique set recognition") {
  Graph b4 = family_bp(4);
  std::vector<std::string> w{"a", "b", "d01", "d02", "d03", "d04"};
  auto block = is_biclique_set(b4, w);
  REQUIRE(block.has_value());
  CHECK(block->left == std::vector<std::string>{"a"});
  CHECK(block->right == std::vector<std::string>{"b", "d01", "d02", "d03", "d04"});

  CHECK(is_biclique_set(b4, {"a"}).has_value());
  CHECK(!is_biclique_set(path_graph(3), {"p01", "p03"}).has_value());
  CHECK_THROWS_AS(is_biclique_set(b4, {}), Error);

  for (const Graph& g : enumerate_small_graphs(5)) {
    if (g.vertex_count() == 0) continue;
    for (Mask w2 = 1;; ++w2) {
      CHECK(is_biclique_set(g, g.labels_of(w2)).has_value() ==
            oracle::brute_is_biclique(g, w2));
      if (w2 == g.vertex_mask()) break;
    }
  }
}

TEST_CASE("biclique partition number") {
  CHECK(biclique_partition_number(complete_bipartite(3, 2)).size == 1);
  CHECK(biclique_partition_number(fig2_graph()).size == 3);
  CHECK(biclique_partition_number(cycle_graph(10)).size == 4);
  CHECK(biclique_partition_number(
            disjoint_union(complete_bipartite(1, 1), complete_bipartite(1, 1)))
            .size == 2);
  CHECK(biclique_partition_number(Graph{}).size == 0);
}

TEST_CASE("biclique partition matches the set-partition oracle") {
  for (const Graph& g : enumerate_small_graphs(6)) {
    auto got = biclique_partition_number(g);
    CHECK(got.size == oracle::brute_biclique_partition(g));
    CHECK(verify_biclique_partition(g, got.witness).ok);
    CHECK(static_cast<int>(got.witness.blocks.size()) == got.size);
  }
}

TEST_CASE("gammai <= bp <= gamma exhaustively with verified witnesses") {
  for (const Graph& g : enumerate_small_graphs(8)) {
    auto gi = independence_domination_number(g);
    auto bp = biclique_partition_number(g);
    auto gamma = domination_number(g);
    CHECK(gi.size <= bp.size);
    CHECK(bp.size <= gamma.size);
    CHECK(verify_biclique_partition(g, bp.witness).ok);
    // gamma witness covers everything
    Mask covered = 0;
    for (const auto& l : gamma.witness)
      covered |= g.closed_neighborhood(g.require_index(l));
    CHECK(covered == g.vertex_mask());
    CHECK(static_cast<int>(gamma.witness.size()) == gamma.size);
    // gammai witness is independent and needs exactly gi.size dominators
    Mask independent = 0;
    for (const auto& l : gi.witness_set) independent |= bit(g.require_index(l));
    bool is_independent = true;
    for_each_bit(independent, [&](int v) {
      if (g.neighbors(v) & independent) is_independent = false;
    });
    CHECK(is_independent);
    CHECK(domination_number(g, gi.witness_set).size == gi.size);
  }
}

TEST_CASE("cover and partition optima coincide") {
  for (const Graph& g : enumerate_small_graphs(7)) {
    if (g.vertex_count() < 1) continue;
    CHECK(biclique_partition_number(g).size == oracle::brute_biclique_cover(g));
  }
}

TEST_CASE("domination-star refinement keeps bp below gamma") {
  for (const Graph& g : enumerate_small_graphs(6)) {
    auto gamma = domination_number(g);
    // stars of a minimum dominating set refine to a partition: dominators
    // claim themselves, every other vertex goes to its first dominator
    std::vector<int> dominators;
    Mask dom_mask = 0;
    for (const auto& l : gamma.witness) {
      dominators.push_back(g.require_index(l));
      dom_mask |= bit(dominators.back());
    }
    std::vector<Mask> cells(dominators.size(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (has_bit(dom_mask, v)) continue;
      for (std::size_t i = 0; i < dominators.size(); ++i)
        if (has_bit(g.closed_neighborhood(dominators[i]), v)) {
          cells[i] |= bit(v);
          break;
        }
    }
    BicliquePartition refined;
    for (std::size_t i = 0; i < dominators.size(); ++i)
      refined.blocks.push_back(
          {{g.label(dominators[i])}, g.labels_of(cells[i])});
    CHECK(verify_biclique_partition(g, refined).ok);
    CHECK(static_cast<int>(refined.blocks.size()) == gamma.size);
    CHECK(biclique_partition_number(g).size <= gamma.size);
  }
}

TEST_CASE("bp deletion monotonicity for dominated pairs") {
  // Scoped to pairs where u stays non-isolated or uv is an edge: with
  // singleton blocks allowed, two isolated vertices u, v satisfy the
  // neighborhood condition vacuously yet bp(2K_1) = 2 > 1 = bp(K_1).
  for (const Graph& g : enumerate_small_graphs(6)) {
    int bp = biclique_partition_number(g).size;
    for (const auto& ul : g.labels())
      for (const auto& vl : g.labels()) {
        if (ul == vl) continue;
        int u = g.require_index(ul), v = g.require_index(vl);
        if ((g.neighbors(u) & ~bit(v) & ~g.neighbors(v)) != 0) continue;
        if (!g.has_edge(u, v) && (g.neighbors(u) & ~bit(v)) == 0) continue;
        std::vector<std::string> keep;
        for (const auto& l : g.labels())
          if (l != vl) keep.push_back(l);
        CHECK(bp <= biclique_partition_number(induced_subgraph(g, keep)).size);
      }
  }
}

TEST_CASE("verify_biclique_partition") {
  Graph k22 = complete_bipartite(2, 2);
  BicliquePartition whole{{{{"x01", "x02"}, {"y01", "y02"}}}};
  CHECK(verify_biclique_partition(k22, whole).ok);

  Graph two_k2 =
      disjoint_union(complete_bipartite(1, 1), complete_bipartite(1, 1));
  BicliquePartition bogus{
      {{{two_k2.label(0), two_k2.label(1)}, {two_k2.label(2), two_k2.label(3)}}}};
  auto verdict = verify_biclique_partition(two_k2, bogus);
  CHECK(!verdict.ok);
  CHECK(!verdict.reason.empty());

  Graph b3 = family_bp(3);
  BicliquePartition derived{{{{"a"}, {"b", "d01", "d02", "d03"}},
                            {{"c01", "c02", "c03"}, {}}}};
  CHECK(!verify_biclique_partition(b3, derived).ok);  // not a singleton
  BicliquePartition stars{{{{"a"}, {"d01", "d02", "d03"}},
                           {{"b"}, {"c01", "c02", "c03"}}}};
  CHECK(verify_biclique_partition(b3, stars).ok);
  CHECK(biclique_partition_number(b3).size == 2);
}

TEST_CASE("no-singleton mode") {
  Graph lone = Graph::build({"a"}, {});
  CHECK(biclique_partition_number(lone).size == 1);
  auto strict = biclique_partition_number(lone, false);
  CHECK(!strict.feasible);

  auto c10 = biclique_partition_number(cycle_graph(10), false);
  CHECK(c10.feasible);
  CHECK(c10.size == 4);
}

TEST_CASE("cochordal cover construction") {
  auto c11 = cochordal_cover_for_subdivided_biclique(1, 1);
  CHECK(c11.subgraphs.size() == 1);
  CHECK(c11.subgraphs[0].size() == 2);
  CHECK(verify_cochordal_cover(subdivide(complete_bipartite(1, 1)).graph, c11));

  auto c22 = cochordal_cover_for_subdivided_biclique(2, 2);
  CHECK(c22.subgraphs.size() == 3);
  CHECK(verify_cochordal_cover(subdivide(complete_bipartite(2, 2)).graph, c22));

  auto c23 = cochordal_cover_for_subdivided_biclique(2, 3);
  CHECK(c23.subgraphs.size() == 4);
  CHECK(verify_cochordal_cover(subdivide(complete_bipartite(2, 3)).graph, c23));

  CHECK_THROWS_AS(cochordal_cover_for_subdivided_biclique(0, 2), Error);
}

TEST_CASE("capacity limits") {
  auto big = [](int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(100 + i));
    return Graph::build(labels, {});
  };
  CHECK_THROWS_AS(domination_number(big(31)), CapacityError);
  CHECK_THROWS_AS(independence_domination_number(big(25)), CapacityError);
  CHECK_THROWS_AS(biclique_partition_number(big(17)), CapacityError);
  CHECK_THROWS_AS(induced_matching_number(big(31)), CapacityError);
  CHECK_THROWS_AS(regularity(big(21)), CapacityError);
  CHECK_THROWS_AS(independence_complex(big(25)), CapacityError);
  CHECK_THROWS_AS(csorba_check(big(21)), CapacityError);
  CHECK_THROWS_AS(enumerate_small_graphs(9), CapacityError);
  SimplicialComplex wide;
  for (int i = 0; i < 21; ++i) wide.universe.push_back("u" + std::to_string(10 + i));
  wide.faces = {0};
  CHECK_THROWS_AS(alexander_dual(wide), CapacityError);
  SimplicialComplex mid;
  for (int i = 0; i < 17; ++i) mid.universe.push_back("u" + std::to_string(10 + i));
  mid.faces = {0};
  CHECK_THROWS_AS(projective_dimension(mid), CapacityError);
}

TEST_CASE("cochordal cover verification") {
  Graph p3 = path_graph(3);
  CochordalCover star{{{{"p01", "p02"}, {"p02", "p03"}}}};
  CHECK(verify_cochordal_cover(p3, star));

  Graph c4 = cycle_graph(4);
  CochordalCover partial{{{{"c01", "c02"}}, {{"c03", "c04"}}}};
  CHECK(!verify_cochordal_cover(c4, partial));

  CochordalCover bad{{{{"c01", "c03"}}}};
  CHECK_THROWS_AS(verify_cochordal_cover(c4, bad), Error);
}
