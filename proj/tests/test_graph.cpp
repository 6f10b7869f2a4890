#include <doctest.h>

#include "bct/corpus.hpp"
#include "bct/families.hpp"
#include "bct/graph.hpp"

using namespace bct;

TEST_CASE("build_graph basics") {
  Graph k2 = build_graph({"a", "b"}, {{"a", "b"}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  Graph lone = build_graph({"a"}, {});
  CHECK(lone.vertex_count() == 1);
  CHECK(lone.edge_count() == 0);

  CHECK_THROWS_AS(build_graph({"a", "b", "c"}, {{"a", "b"}, {"a", "a"}}), Error);
  CHECK_THROWS_AS(build_graph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(build_graph({"a"}, {{"a", "b"}}), Error);
}

TEST_CASE("capacity limit") {
  std::vector<std::string> labels;
  for (int i = 0; i < 65; ++i) labels.push_back("n" + std::to_string(i));
  CHECK_THROWS_AS(Graph::build(labels, {}), CapacityError);
}

TEST_CASE("bipartition") {
  auto c4 = bipartition(cycle_graph(4));
  CHECK(popcount(c4.left) == 2);
  CHECK(popcount(c4.right) == 2);

  try {
    bipartition(cycle_graph(5));
    FAIL("C_5 must not be bipartite");
  } catch (const NotBipartiteError& e) {
    CHECK(e.odd_cycle.size() == 5);
    // witness closes into an odd closed walk in the graph
    Graph c5 = cycle_graph(5);
    for (std::size_t i = 0; i < e.odd_cycle.size(); ++i) {
      int u = c5.require_index(e.odd_cycle[i]);
      int v = c5.require_index(e.odd_cycle[(i + 1) % e.odd_cycle.size()]);
      CHECK(c5.has_edge(u, v));
    }
  }

  auto fig2 = bipartition(fig2_graph());
  CHECK(fig2.graph.labels_of(fig2.left) ==
        std::vector<std::string>{"v1", "v3", "v5", "v7"});
  CHECK(fig2.graph.labels_of(fig2.right) ==
        std::vector<std::string>{"v2", "v4", "v6", "v8"});
}

TEST_CASE("induced subgraph") {
  Graph c6 = cycle_graph(6);
  Graph p = induced_subgraph(c6, {"c01", "c02", "c03", "c04"});
  CHECK(isomorphic(p, path_graph(4)));

  CHECK(induced_subgraph(c6, {}).vertex_count() == 0);

  Graph side = induced_subgraph(complete_bipartite(2, 3), {"y01", "y02", "y03"});
  CHECK(side.vertex_count() == 3);
  CHECK(side.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(c6, {"zz"}), Error);
}

TEST_CASE("delete closed neighborhood") {
  Graph p4 = path_graph(4);
  CHECK(delete_closed_neighborhood(p4, "p02", "p03").vertex_count() == 0);
  Graph rest = delete_closed_neighborhood(p4, "p01", "p02");
  CHECK(rest.labels() == std::vector<std::string>{"p04"});
  CHECK(delete_closed_neighborhood(complete_bipartite(2, 3), "x01", "y01")
            .vertex_count() == 0);
  CHECK_THROWS_AS(delete_closed_neighborhood(p4, "p01", "p03"), Error);
  CHECK_THROWS_AS(delete_closed_neighborhood(p4, "zz"), Error);
}

TEST_CASE("subdivide rejects label collisions") {
  Graph tricky = build_graph({"a", "b", "a*b"}, {{"a", "b"}});
  CHECK_THROWS_AS(subdivide(tricky), Error);
}

TEST_CASE("subdivide") {
  CHECK(isomorphic(subdivide(complete_bipartite(1, 1)).graph, path_graph(3)));
  CHECK(isomorphic(subdivide(cycle_graph(5)).graph, cycle_graph(10)));

  auto s23 = subdivide(complete_bipartite(2, 3));
  CHECK(s23.graph.vertex_count() == 11);
  CHECK(s23.graph.edge_count() == 12);
  CHECK(popcount(s23.edge_vertex_mask()) == 6);
  for (int v = 0; v < s23.graph.vertex_count(); ++v)
    if (s23.origin[v].is_edge_vertex) CHECK(s23.graph.degree(v) == 2);

  for (int k = 3; k <= 8; ++k)
    CHECK(isomorphic(subdivide(cycle_graph(k)).graph, cycle_graph(2 * k)));
}

TEST_CASE("subdivision counts and deletion identity on the small corpus") {
  for (const Graph& g : enumerate_small_graphs(5)) {
    auto s = subdivide(g);
    CHECK(s.graph.vertex_count() == g.vertex_count() + g.edge_count());
    CHECK(s.graph.edge_count() == 2 * g.edge_count());
    // S(G) - N[x] = S(G - x) vertex by vertex, label for label
    for (const auto& x : g.labels()) {
      Graph lhs = delete_closed_neighborhood(s.graph, x);
      Graph rhs = subdivide(induced_subgraph(
                                g,
                                [&] {
                                  std::vector<std::string> keep;
                                  for (const auto& l : g.labels())
                                    if (l != x) keep.push_back(l);
                                  return keep;
                                }()))
                      .graph;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("whisker") {
  CHECK(isomorphic(whisker(complete_bipartite(1, 1), {"x01", "y01"}), path_graph(4)));
  Graph g = fig2_graph();
  CHECK(whisker(g, {}) == g);

  Graph s12 = subdivide(complete_bipartite(1, 2)).graph;
  Graph w = whisker(s12, {"y01", "y02"});
  CHECK(w.vertex_count() == 7);
  CHECK(w.edge_count() == 6);

  Graph h = whisker(g, {"v1", "v5"});
  CHECK(h.vertex_count() == g.vertex_count() + 2);
  CHECK(h.edge_count() == g.edge_count() + 2);
  CHECK(h.degree(h.require_index("v1'")) == 1);
  CHECK_THROWS_AS(whisker(g, {"zz"}), Error);
}

TEST_CASE("complement") {
  CHECK(isomorphic(complement(path_graph(4)), path_graph(4)));
  Graph k3bar = complement(cycle_graph(3));
  CHECK(k3bar.edge_count() == 0);
  for (const Graph& g : enumerate_small_graphs(5))
    CHECK(complement(complement(g)) == g);
}

TEST_CASE("disjoint union") {
  Graph two_k2 = disjoint_union(complete_bipartite(1, 1), complete_bipartite(1, 1));
  CHECK(two_k2.vertex_count() == 4);
  CHECK(two_k2.edge_count() == 2);

  Graph g = fig2_graph();
  CHECK(disjoint_union(g, Graph{}) == g);

  Graph big = disjoint_union(g, cycle_graph(4));
  CHECK(big.vertex_count() == 12);
  CHECK(big.edge_count() == 14);
}

TEST_CASE("generate_family shapes") {
  Graph r44 = generate_family("R", {4, 4});
  CHECK(r44.vertex_count() == 21);
  CHECK(r44.edge_count() == 24);

  Graph b4 = generate_family("Bp", {4});
  CHECK(b4.vertex_count() == 10);
  CHECK(b4.edge_count() == 13);

  Graph h3 = generate_family("Hn", {3});
  CHECK(h3.vertex_count() == 9);
  CHECK(h3.edge_count() == 10);

  Graph hk3 = generate_family("Hk", {3});
  CHECK(hk3.vertex_count() == 17);
  CHECK(hk3.edge_count() == 18);
  CHECK(hk3.degree(hk3.require_index("w")) == 4);

  CHECK(generate_family("S222", {}).vertex_count() == 7);
  CHECK(generate_family("DS2", {}).edge_count() == 5);

  Graph c6_4 = generate_family("B4", {}, cycle_graph(6));
  CHECK(c6_4.vertex_count() == 6 * 4);
  CHECK(c6_4.edge_count() == 6 + 6 * 4);

  CHECK_THROWS_AS(generate_family("R", {2, 2}), Error);
  CHECK_THROWS_AS(generate_family("Hk", {2}), Error);
  CHECK_THROWS_AS(generate_family("B4", {}), Error);
  CHECK_THROWS_AS(generate_family("nope", {}), Error);
}

TEST_CASE("family bipartiteness") {
  CHECK(try_bipartition(generate_family("R", {4, 2})).has_value());
  CHECK(!try_bipartition(generate_family("R", {3, 2})).has_value());
  CHECK(!try_bipartition(cycle_graph(5)).has_value());
  CHECK(try_bipartition(generate_family("Bp", {3})).has_value());
  CHECK(try_bipartition(generate_family("Hk", {3})).has_value());
  CHECK(try_bipartition(generate_family("Hn", {4})).has_value());
  CHECK(try_bipartition(fig2_graph()).has_value());
  CHECK(try_bipartition(long_claw()).has_value());
}

TEST_CASE("whisker counts on the corpus") {
  for (const Graph& g : enumerate_small_graphs(4)) {
    Graph w = whisker(g, g.labels());
    CHECK(w.vertex_count() == 2 * g.vertex_count());
    CHECK(w.edge_count() == g.edge_count() + g.vertex_count());
  }
}
