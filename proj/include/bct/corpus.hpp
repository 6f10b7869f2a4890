#ifndef BCT_CORPUS_HPP
#define BCT_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// Canonical encoding of a graph on at most 10 vertices: the minimum
// upper-triangle adjacency bit string over all vertex orders compatible
// with an iterated-degree refinement. Equal keys mean isomorphic graphs.
std::uint64_t canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All graphs up to isomorphism with at most max_vertices vertices (the
// 0-vertex graph included) that satisfy filter, grown by vertex extension
// with canonical-form deduplication. Deterministic order: by vertex count,
// then by canonical key.
std::vector<Graph> enumerate_small_graphs(
    int max_vertices, const std::function<bool(const Graph&)>& filter = {});

// Extension-based enumeration restricted to a hereditary class: parents
// failing the predicate are never extended. Exact for classes closed under
// induced subgraphs (chordal bipartite, bipartite, ...).
std::vector<Graph> enumerate_hereditary_class(
    int max_vertices, const std::function<bool(const Graph&)>& hereditary);

struct RandomCorpusSpec {
  enum class ClassFilter { Any, ChordalBipartite, LongClawFree };

  int n_left = 0;
  int n_right = 0;
  int edge_budget = 0;
  int count = 1;
  std::uint64_t seed = 1;
  ClassFilter class_filter = ClassFilter::ChordalBipartite;
};

// Seeded incremental edge insertion on a fixed bipartite vertex set;
// candidate edges breaking the class are rejected. Deterministic per spec.
std::vector<Graph> random_chordal_bipartite(const RandomCorpusSpec& spec);

}  // namespace bct

#endif
