#ifndef BCT_TOPOLOGY_HPP
#define BCT_TOPOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// Explicit simplicial complex: faces are bitmasks over the sorted universe.
// No faces at all is the void complex; {∅} alone is the empty complex.
// Universe members need not be vertices of the complex (Alexander duals
// routinely drop singletons); absent vertices simply carry no faces.
struct SimplicialComplex {
  std::vector<std::string> universe;  // sorted
  std::vector<Mask> faces;            // sorted masks, closed under subsets

  bool is_void() const { return faces.empty(); }
  bool has_face(Mask f) const;
  // Largest face dimension; -1 for {∅}, -2 for void.
  int dim() const;
  int universe_index(const std::string& label) const;
};

// Validates downward closure; throws on a missing subset face.
SimplicialComplex make_complex(std::vector<std::string> universe,
                               std::vector<Mask> faces);

// Builds the closure of the given facets.
SimplicialComplex complex_from_facets(
    std::vector<std::string> universe,
    const std::vector<std::vector<std::string>>& facets);

// Reduced GF(2) Betti numbers; only nonzero entries are stored.
struct BettiTable {
  std::map<int, int> ranks;

  int at(int d) const {
    auto it = ranks.find(d);
    return it == ranks.end() ? 0 : it->second;
  }
  bool all_zero() const { return ranks.empty(); }
  // Largest dimension with nonzero rank, -2 when all zero.
  int top_dim() const { return ranks.empty() ? -2 : ranks.rbegin()->first; }
  bool operator==(const BettiTable&) const = default;
};

SimplicialComplex independence_complex(const Graph& g);

SimplicialComplex induced_subcomplex(const SimplicialComplex& x,
                                     const std::vector<std::string>& keep);

SimplicialComplex join_complex(const SimplicialComplex& a,
                               const SimplicialComplex& b);

SimplicialComplex suspension(const SimplicialComplex& x);

SimplicialComplex alexander_dual(const SimplicialComplex& x);

BettiTable reduced_betti_numbers(const SimplicialComplex& x);

// max { j : some induced subcomplex of Ind(g) has nonzero reduced homology
// in dimension j-1 }. Scans subsets of V(g) by decreasing size; subsets
// inducing an isolated vertex are cones and are skipped. Parallel over
// BCT_THREADS workers.
int regularity(const Graph& g);

// max over S and nonzero Betti dimensions d of |S| - d - 1 (0 if none).
int projective_dimension(const SimplicialComplex& x);

// Homology-level Csorba test: Betti of Ind(S(g)) equals the Betti of
// the Alexander dual of Ind(g) shifted up by one dimension.
bool csorba_check(const Graph& g);

// Maximal faces, one sorted label list per facet.
std::vector<std::vector<std::string>> facets(const SimplicialComplex& x);

}  // namespace bct

#endif
