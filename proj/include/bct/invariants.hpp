#ifndef BCT_INVARIANTS_HPP
#define BCT_INVARIANTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// One biclique of a partition. Both parts nonempty with every cross pair an
// edge of the host, or a singleton (right empty, |left| = 1).
struct BicliqueBlock {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

struct BicliquePartition {
  std::vector<BicliqueBlock> blocks;
};

// Cover of the host's edge set; each member is an edge list whose incident
// vertices induce a co-chordal subgraph.
struct CochordalCover {
  std::vector<std::vector<std::pair<std::string, std::string>>> subgraphs;
};

struct DominationResult {
  int size = 0;
  std::vector<std::string> witness;  // lexicographically least minimum set
};

// Minimum A with targets ⊆ ∪_{a∈A} N[a]. γ(g) is the all-targets call.
DominationResult domination_number(const Graph& g,
                                   const std::vector<std::string>& targets);
DominationResult domination_number(const Graph& g);

struct IndependenceDominationResult {
  int size = 0;
  std::vector<std::string> witness_set;  // a maximizing independent set
};

IndependenceDominationResult independence_domination_number(const Graph& g);

// A split of W into a valid block, if one exists.
std::optional<BicliqueBlock> is_biclique_set(const Graph& g,
                                             const std::vector<std::string>& W);

struct BicliquePartitionResult {
  bool feasible = true;  // false only with singletons disabled
  int size = 0;
  BicliquePartition witness;
};

BicliquePartitionResult biclique_partition_number(const Graph& g,
                                                  bool allow_singletons = true);

struct VerifyPartitionResult {
  bool ok = true;
  std::string reason;
};

VerifyPartitionResult verify_biclique_partition(const Graph& g,
                                                const BicliquePartition& p);

// The explicit size-(n+m-1) cover of S(K_{n,m}): per star center y_j its
// star plus the extra edge to x_1, and the plain star at each x_i, i >= 2.
CochordalCover cochordal_cover_for_subdivided_biclique(int n, int m);

bool verify_cochordal_cover(const Graph& g, const CochordalCover& cover);

}  // namespace bct

#endif
