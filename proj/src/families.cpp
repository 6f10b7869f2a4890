#include "bct/families.hpp"

#include <algorithm>

namespace bct {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
}

}  // namespace

std::string zero_pad2(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

Graph complete_bipartite(int n, int m) {
  require(n >= 1 && m >= 1, "K_{n,m} needs n, m >= 1");
  std::vector<std::string> labels;
  Edges edges;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + zero_pad2(i));
  for (int j = 1; j <= m; ++j) labels.push_back("y" + zero_pad2(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      edges.emplace_back("x" + zero_pad2(i), "y" + zero_pad2(j));
  return Graph::build(std::move(labels), std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "P_n needs n >= 1");
  std::vector<std::string> labels;
  Edges edges;
  for (int i = 1; i <= n; ++i) labels.push_back("p" + zero_pad2(i));
  for (int i = 1; i < n; ++i)
    edges.emplace_back("p" + zero_pad2(i), "p" + zero_pad2(i + 1));
  return Graph::build(std::move(labels), std::move(edges));
}

Graph cycle_graph(int k) {
  require(k >= 3, "C_k needs k >= 3");
  std::vector<std::string> labels;
  Edges edges;
  for (int i = 1; i <= k; ++i) labels.push_back("c" + zero_pad2(i));
  for (int i = 1; i < k; ++i)
    edges.emplace_back("c" + zero_pad2(i), "c" + zero_pad2(i + 1));
  edges.emplace_back("c" + zero_pad2(k), "c01");
  return Graph::build(std::move(labels), std::move(edges));
}

Graph star_graph(int q) {
  require(q >= 1, "K_{1,q} needs q >= 1");
  std::vector<std::string> labels{"c"};
  Edges edges;
  for (int i = 1; i <= q; ++i) {
    labels.push_back("l" + zero_pad2(i));
    edges.emplace_back("c", "l" + zero_pad2(i));
  }
  return Graph::build(std::move(labels), std::move(edges));
}

Graph long_claw() { return subdivide(star_graph(3)).graph; }

Graph family_r(int p, int n) {
  require(p >= 3 && n >= 2, "R^p_n needs p >= 3 and n >= 2");
  std::vector<std::string> labels{"z"};
  Edges edges;
  for (int i = 1; i <= n; ++i) {
    std::string xi = "x" + zero_pad2(i);
    labels.push_back(xi);
    edges.emplace_back("z", xi);
    auto ring = [&](int j) { return "y" + zero_pad2(i) + "." + zero_pad2(j); };
    for (int j = 1; j <= p; ++j) labels.push_back(ring(j));
    for (int j = 1; j < p; ++j) edges.emplace_back(ring(j), ring(j + 1));
    edges.emplace_back(ring(p), ring(1));
    edges.emplace_back(xi, ring(1));
  }
  return Graph::build(std::move(labels), std::move(edges));
}

Graph attach_c4_everywhere(const Graph& base) {
  std::vector<std::string> labels = base.labels();
  Edges edges = base.edge_labels();
  for (const auto& v : base.labels()) {
    std::string c1 = v + ".c1", c2 = v + ".c2", c3 = v + ".c3";
    labels.insert(labels.end(), {c1, c2, c3});
    edges.emplace_back(v, c1);
    edges.emplace_back(c1, c3);
    edges.emplace_back(c3, c2);
    edges.emplace_back(c2, v);
  }
  return Graph::build(std::move(labels), std::move(edges));
}

Graph family_h_matching(int n) {
  require(n >= 1, "H_n needs n >= 1");
  std::vector<std::string> labels{"x", "y"};
  Edges edges;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("a" + zero_pad2(i));
    edges.emplace_back("x", "a" + zero_pad2(i));
  }
  for (int j = 1; j <= n + 1; ++j) {
    labels.push_back("b" + zero_pad2(j));
    edges.emplace_back("y", "b" + zero_pad2(j));
  }
  for (int i = 1; i <= n; ++i)
    edges.emplace_back("a" + zero_pad2(i), "b" + zero_pad2(i));
  return Graph::build(std::move(labels), std::move(edges));
}

Graph family_bp(int p) {
  require(p >= 1, "B_p needs p >= 1");
  std::vector<std::string> labels{"a", "b"};
  Edges edges{{"a", "b"}};
  for (int i = 1; i <= p; ++i) {
    std::string ci = "c" + zero_pad2(i), di = "d" + zero_pad2(i);
    labels.push_back(ci);
    labels.push_back(di);
    edges.emplace_back("b", ci);
    edges.emplace_back(ci, di);
    edges.emplace_back(di, "a");
  }
  return Graph::build(std::move(labels), std::move(edges));
}

Graph double_star() {
  return Graph::build({"u", "u1", "u2", "v", "v1", "v2"},
                      {{"u", "v"}, {"u", "u1"}, {"u", "u2"}, {"v", "v1"}, {"v", "v2"}});
}

Graph family_h_cycle(int k) {
  require(k >= 3, "H_k needs k >= 3");
  // C_{6k} on c01..c<6k>, then c01 and c07 (distance six) become "w".
  int ring = 6 * k;
  auto name = [&](int i) {
    int j = (i - 1) % ring + 1;
    return (j == 1 || j == 7) ? std::string("w") : "c" + zero_pad2(j);
  };
  std::vector<std::string> labels{"w"};
  Edges edges;
  for (int i = 2; i <= ring; ++i)
    if (i != 7) labels.push_back("c" + zero_pad2(i));
  for (int i = 1; i <= ring; ++i) edges.emplace_back(name(i), name(i + 1));
  return Graph::build(std::move(labels), std::move(edges));
}

Graph fig2_graph() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("v" + std::to_string(i));
  Edges edges{{"v1", "v2"}, {"v2", "v3"}, {"v1", "v4"}, {"v2", "v5"},
              {"v4", "v5"}, {"v3", "v6"}, {"v5", "v6"}, {"v4", "v7"},
              {"v5", "v8"}, {"v7", "v8"}};
  return Graph::build(std::move(labels), std::move(edges));
}

Graph gamma_gallery_prism() {
  std::vector<std::string> labels{"u", "w", "t1", "t2", "t3", "b1", "b2", "b3"};
  Edges edges{{"t1", "b1"}, {"t2", "b2"}, {"t3", "b3"}, {"u", "t1"}, {"u", "t2"},
              {"u", "t3"}, {"w", "b1"},  {"w", "b2"},  {"w", "b3"}};
  return Graph::build(std::move(labels), std::move(edges));
}

Graph gamma_gallery_prism_chord() {
  auto g = gamma_gallery_prism();
  auto edges = g.edge_labels();
  edges.emplace_back("u", "w");
  return Graph::build(g.labels(), std::move(edges));
}

Graph gamma_gallery_wide() {
  std::vector<std::string> labels{"t", "s1", "s2"};
  Edges edges;
  const char* rungs[] = {"a", "b", "c", "d"};
  for (const char* r : rungs) {
    labels.push_back(std::string(r) + "1");
    labels.push_back(std::string(r) + "2");
    edges.emplace_back(std::string(r) + "1", std::string(r) + "2");
    edges.emplace_back("t", std::string(r) + "2");
  }
  edges.emplace_back("s1", "a1");
  edges.emplace_back("s1", "b1");
  edges.emplace_back("s2", "c1");
  edges.emplace_back("s2", "d1");
  edges.emplace_back("s1", "t");
  edges.emplace_back("s2", "t");
  return Graph::build(std::move(labels), std::move(edges));
}

Graph generate_family(const std::string& name, const std::vector<int>& params,
                      const std::optional<Graph>& base) {
  auto arity = [&](std::size_t k) {
    require(params.size() == k, "family '" + name + "' expects " +
                                    std::to_string(k) + " integer parameter(s)");
  };
  if (name == "K") {
    arity(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "P") {
    arity(1);
    return path_graph(params[0]);
  }
  if (name == "C") {
    arity(1);
    return cycle_graph(params[0]);
  }
  if (name == "star") {
    arity(1);
    return star_graph(params[0]);
  }
  if (name == "S222") {
    arity(0);
    return long_claw();
  }
  if (name == "R") {
    arity(2);
    return family_r(params[0], params[1]);
  }
  if (name == "B4") {
    arity(0);
    require(base.has_value(), "family 'B4' needs a base graph");
    return attach_c4_everywhere(*base);
  }
  if (name == "Hn") {
    arity(1);
    return family_h_matching(params[0]);
  }
  if (name == "Bp") {
    arity(1);
    return family_bp(params[0]);
  }
  if (name == "DS2") {
    arity(0);
    return double_star();
  }
  if (name == "Hk") {
    arity(1);
    return family_h_cycle(params[0]);
  }
  if (name == "fig2") {
    arity(0);
    return fig2_graph();
  }
  throw Error("unknown family '" + name + "'");
}

}  // namespace bct
