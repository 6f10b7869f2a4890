#ifndef BCT_CSBE_HPP
#define BCT_CSBE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bct/graph.hpp"
#include "bct/structure.hpp"

namespace bct {

using Edge = std::pair<std::string, std::string>;

struct EliminationStep {
  Edge edge;
  std::optional<std::string> simple_endpoint;
  std::vector<std::string> closed_neighborhood;  // N_{B_{i-1}}[e_i]
  std::vector<std::string> isolated_created;     // Iso_{B_{i-1}}(e_i)
};

struct EliminationSequence {
  std::vector<EliminationStep> steps;
  std::vector<std::string> residual_vertices;  // V(B_k)
};

// Replay of a proposed edge sequence against b.
struct ValidationReport {
  bool is_biclique_elim = false;  // every step bisimplicial, residue edgeless
  bool is_simple = false;         // every step has a simple endpoint
  bool is_complete = false;       // biclique elimination with empty Iso union
  EliminationSequence steps;
  std::optional<std::string> failure;  // set when replay hits a missing edge
};

ValidationReport validate_elimination_sequence(const Graph& b,
                                               const std::vector<Edge>& seq);

// Isolated vertices of b - N[e].
std::vector<std::string> isolated_after(const Graph& b, const std::string& u,
                                        const std::string& v);

struct CsbeOutcome {
  std::optional<EliminationSequence> sequence;
  // On refusal: the graph state that blocked step 2, and the edges already
  // taken before that point.
  std::optional<Graph> refusal_state;
  std::vector<Edge> partial;

  bool is_csbe_graph() const { return sequence.has_value(); }
};

// The polynomial elimination scan: repeatedly take the first (sorted) edge
// that is bisimplicial, has a simple endpoint, and leaves no isolated
// vertex behind. Throws NotBipartiteError on non-bipartite input.
CsbeOutcome find_csbe_sequence(const Graph& b);

enum class HomotopyKind { Contractible, Sphere, Unknown };

struct HomotopyReport {
  HomotopyKind kind = HomotopyKind::Unknown;
  int sphere_dimension = 0;  // |B| - k - 1, valid for Sphere only
  std::string certificate;   // one-line description of the evidence
  std::optional<EliminationSequence> csbe_sequence;    // Sphere evidence
  std::optional<EliminationSequence> greedy_sequence;  // Contractible evidence
  std::optional<Graph> refusal_state;
};

// Homotopy type of Ind(S(b)) as certified by elimination sequences:
// a complete sequence of length k gives the (|B|-k-1)-sphere; any simple
// biclique elimination sequence (or chordal bipartiteness) gives
// contractibility when no complete one exists; otherwise Unknown.
HomotopyReport homotopy_type_of_subdivision(const Graph& b);

// A matching M with (b, M) in the Γ family, if any: b connected bipartite
// with min degree >= 2, M induced with |M| > |b|/3, and every outside
// vertex adjacent to endpoints of at least two M-edges.
std::optional<InducedMatching> gamma_membership(const Graph& b);

// |E(b)| when b is a CSBE-graph with no induced long claw; the two
// certificates together pin bp(b).
std::optional<int> bp_via_csbe(const Graph& b);

// Exhaustive enumeration of every simple biclique elimination sequence.
struct SequenceCensus {
  long total = 0;     // sequences reaching an edgeless residue
  long complete = 0;  // of these, sequences with an empty Iso union
  int min_length = -1;
  int max_length = -1;
};

SequenceCensus enumerate_simple_sequences(const Graph& b,
                                          long sequence_cap = 1000000);

}  // namespace bct

#endif
