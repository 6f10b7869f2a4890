#include "bct/csbe.hpp"

#include <algorithm>
#include <functional>

namespace bct {

namespace {

Mask isolated_in(const Graph& g, Mask alive) {
  Mask iso = 0;
  for_each_bit(alive, [&](int v) {
    if ((g.neighbors(v) & alive) == 0) iso |= bit(v);
  });
  return iso;
}

bool has_edge_in(const Graph& g, Mask alive) {
  bool found = false;
  for_each_bit(alive, [&](int v) {
    if (!found && (g.neighbors(v) & alive & ~full_mask(v + 1)) != 0) found = true;
  });
  return found;
}

std::vector<std::pair<int, int>> edges_in(const Graph& g, Mask alive) {
  std::vector<std::pair<int, int>> out;
  for_each_bit(alive, [&](int u) {
    for_each_bit(g.neighbors(u) & alive & ~full_mask(u + 1),
                 [&](int v) { out.emplace_back(u, v); });
  });
  return out;
}

std::optional<std::string> simple_endpoint_in(const Graph& g, Mask alive,
                                              int u, int v) {
  if (simple_vertex_in(g, alive, u)) return g.label(u);
  if (simple_vertex_in(g, alive, v)) return g.label(v);
  return std::nullopt;
}

}  // namespace

std::vector<std::string> isolated_after(const Graph& b, const std::string& u,
                                        const std::string& v) {
  int a = b.require_index(u);
  int c = b.require_index(v);
  if (!b.has_edge(a, c))
    throw Error("'" + u + "' and '" + v + "' are not an edge");
  Mask rest = b.vertex_mask() & ~b.closed_neighborhood(a, c);
  return b.labels_of(isolated_in(b, rest));
}

ValidationReport validate_elimination_sequence(const Graph& b,
                                               const std::vector<Edge>& seq) {
  ValidationReport report;
  Mask alive = b.vertex_mask();
  bool all_bisimplicial = true, all_simple = true;
  Mask iso_union = 0;
  for (const auto& [lu, lv] : seq) {
    int u = b.index_of(lu), v = b.index_of(lv);
    if (u < 0 || v < 0 || !has_bit(alive, u) || !has_bit(alive, v) ||
        !b.has_edge(u, v)) {
      report.failure = "edge '" + lu + "' - '" + lv +
                       "' does not exist at replay time";
      all_bisimplicial = all_simple = false;
      break;
    }
    EliminationStep step;
    step.edge = {b.label(std::min(u, v)), b.label(std::max(u, v))};
    if (!bisimplicial_in(b, alive, u, v)) all_bisimplicial = false;
    step.simple_endpoint = simple_endpoint_in(b, alive, std::min(u, v),
                                              std::max(u, v));
    if (!step.simple_endpoint) all_simple = false;
    Mask closed = b.closed_neighborhood(u, v) & alive;
    step.closed_neighborhood = b.labels_of(closed);
    alive &= ~closed;
    Mask iso = isolated_in(b, alive);
    step.isolated_created = b.labels_of(iso);
    iso_union |= iso;
    report.steps.steps.push_back(std::move(step));
  }
  report.steps.residual_vertices = b.labels_of(alive);
  bool edgeless = !has_edge_in(b, alive);
  report.is_biclique_elim = all_bisimplicial && edgeless && !report.failure;
  report.is_simple = all_simple && !report.failure;
  // An edgeless residue with an empty Iso union forces an empty residue;
  // the alive check keeps the empty sequence on a vertexful edgeless graph
  // from counting as complete.
  report.is_complete = report.is_biclique_elim && iso_union == 0 && alive == 0;
  return report;
}

CsbeOutcome find_csbe_sequence(const Graph& b) {
  bipartition(b);  // throws when not bipartite
  CsbeOutcome out;
  EliminationSequence seq;
  Mask alive = b.vertex_mask();
  while (alive) {
    int pick_u = -1, pick_v = -1;
    for (auto [u, v] : edges_in(b, alive)) {
      if (!bisimplicial_in(b, alive, u, v)) continue;
      if (!simple_vertex_in(b, alive, u) && !simple_vertex_in(b, alive, v))
        continue;
      Mask rest = alive & ~b.closed_neighborhood(u, v);
      if (isolated_in(b, rest) != 0) continue;
      pick_u = u;
      pick_v = v;
      break;
    }
    if (pick_u < 0) {
      out.refusal_state = b.induced(alive);
      for (const auto& s : seq.steps) out.partial.push_back(s.edge);
      return out;
    }
    EliminationStep step;
    step.edge = {b.label(pick_u), b.label(pick_v)};
    step.simple_endpoint = simple_endpoint_in(b, alive, pick_u, pick_v);
    Mask closed = b.closed_neighborhood(pick_u, pick_v) & alive;
    step.closed_neighborhood = b.labels_of(closed);
    alive &= ~closed;
    seq.steps.push_back(std::move(step));
  }
  out.sequence = std::move(seq);
  return out;
}

namespace {

// Greedy simple biclique elimination without the isolated-vertex rule.
// Reaching an edgeless residue certifies a simple biclique elimination
// sequence; getting stuck certifies nothing.
std::optional<EliminationSequence> greedy_simple_elimination(const Graph& b) {
  EliminationSequence seq;
  Mask alive = b.vertex_mask();
  while (has_edge_in(b, alive)) {
    int pick_u = -1, pick_v = -1;
    for (auto [u, v] : edges_in(b, alive)) {
      if (!bisimplicial_in(b, alive, u, v)) continue;
      if (!simple_vertex_in(b, alive, u) && !simple_vertex_in(b, alive, v))
        continue;
      pick_u = u;
      pick_v = v;
      break;
    }
    if (pick_u < 0) return std::nullopt;
    EliminationStep step;
    step.edge = {b.label(pick_u), b.label(pick_v)};
    step.simple_endpoint = simple_endpoint_in(b, alive, pick_u, pick_v);
    Mask closed = b.closed_neighborhood(pick_u, pick_v) & alive;
    step.closed_neighborhood = b.labels_of(closed);
    alive &= ~closed;
    Mask iso = isolated_in(b, alive);
    step.isolated_created = b.labels_of(iso);
    seq.steps.push_back(std::move(step));
  }
  seq.residual_vertices = b.labels_of(alive);
  return seq;
}

}  // namespace

HomotopyReport homotopy_type_of_subdivision(const Graph& b) {
  bipartition(b);
  HomotopyReport report;
  if (b.vertex_count() == 0) {
    report.kind = HomotopyKind::Sphere;
    report.sphere_dimension = -1;
    report.certificate = "empty graph; Ind(S(B)) = {∅}";
    return report;
  }
  Mask iso = isolated_in(b, b.vertex_mask());
  if (iso != 0) {
    report.kind = HomotopyKind::Contractible;
    report.certificate =
        "isolated vertex '" + b.label(lowest_bit(iso)) + "' survives subdivision";
    return report;
  }
  CsbeOutcome csbe = find_csbe_sequence(b);
  if (csbe.sequence) {
    report.kind = HomotopyKind::Sphere;
    report.sphere_dimension =
        b.vertex_count() - static_cast<int>(csbe.sequence->steps.size()) - 1;
    report.certificate = "complete simple biclique elimination of length " +
                         std::to_string(csbe.sequence->steps.size());
    report.csbe_sequence = std::move(csbe.sequence);
    return report;
  }
  report.refusal_state = std::move(csbe.refusal_state);
  if (auto greedy = greedy_simple_elimination(b)) {
    report.kind = HomotopyKind::Contractible;
    report.certificate =
        "simple biclique elimination sequence exists but none is complete";
    report.greedy_sequence = std::move(greedy);
    return report;
  }
  if (b.vertex_count() <= 24 && is_chordal_bipartite(b)) {
    report.kind = HomotopyKind::Contractible;
    report.certificate = "chordal bipartite without a complete sequence";
    return report;
  }
  report.kind = HomotopyKind::Unknown;
  report.certificate = "no simple biclique elimination sequence found";
  return report;
}

namespace {

// Enumerates maximal induced matchings as maximal independent sets of the
// edge-conflict relation.
void maximal_induced_matchings(const Graph& g,
                               const std::function<void(const std::vector<int>&)>& sink) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  if (m > 62) throw CapacityError("too many edges for matching enumeration");
  std::vector<Mask> conflict(m, 0);
  for (int i = 0; i < m; ++i) {
    Mask reach = g.closed_neighborhood(edges[i].first, edges[i].second);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (has_bit(reach, edges[j].first) || has_bit(reach, edges[j].second))
        conflict[i] |= bit(j);
    }
  }
  std::vector<int> chosen;
  std::function<void(Mask, Mask, Mask)> bk = [&](Mask r, Mask p, Mask x) {
    if (!p && !x) {
      chosen.clear();
      for_each_bit(r, [&](int e) { chosen.push_back(e); });
      sink(chosen);
      return;
    }
    int pivot = -1, best = -1;
    for_each_bit(p | x, [&](int u) {
      int cnt = popcount(p & ~conflict[u] & ~bit(u));
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    });
    Mask branch = p & (conflict[pivot] | bit(pivot));
    for_each_bit(branch, [&](int v) {
      Mask keep = ~conflict[v] & ~bit(v);
      bk(r | bit(v), p & keep, x & keep);
      p &= ~bit(v);
      x |= bit(v);
    });
  };
  bk(0, full_mask(m), 0);
}

}  // namespace

std::optional<InducedMatching> gamma_membership(const Graph& b) {
  if (b.vertex_count() > 20)
    throw CapacityError("Γ membership test capped at 20 vertices");
  if (!try_bipartition(b)) return std::nullopt;
  if (b.vertex_count() == 0 || !b.connected() || b.min_degree() < 2)
    return std::nullopt;
  int need = b.vertex_count() / 3 + 1;  // |M| > |B|/3
  if (induced_matching_number(b).size < need) return std::nullopt;
  auto edges = b.edges();
  std::optional<InducedMatching> hit;
  maximal_induced_matchings(b, [&](const std::vector<int>& matching) {
    if (hit || static_cast<int>(matching.size()) < need) return;
    Mask covered = 0;
    std::vector<Mask> endpoint_masks;
    for (int e : matching) {
      Mask em = bit(edges[e].first) | bit(edges[e].second);
      covered |= em;
      endpoint_masks.push_back(em);
    }
    bool ok = true;
    for_each_bit(b.vertex_mask() & ~covered, [&](int v) {
      if (!ok) return;
      int touched = 0;
      for (Mask em : endpoint_masks)
        if (b.neighbors(v) & em) ++touched;
      if (touched < 2) ok = false;
    });
    if (ok) {
      InducedMatching m;
      for (int e : matching)
        m.edges.emplace_back(b.label(edges[e].first), b.label(edges[e].second));
      hit = std::move(m);
    }
  });
  return hit;
}

std::optional<int> bp_via_csbe(const Graph& b) {
  CsbeOutcome outcome = find_csbe_sequence(b);
  if (!outcome.sequence) return std::nullopt;
  if (find_long_claw(b)) return std::nullopt;
  return static_cast<int>(outcome.sequence->steps.size());
}

namespace {

void census_rec(const Graph& b, Mask alive, bool iso_clean, int length,
                SequenceCensus& census, long cap) {
  if (census.total >= cap)
    throw CapacityError("simple sequence enumeration exceeded its cap");
  if (!has_edge_in(b, alive)) {
    ++census.total;
    if (iso_clean && alive == 0) ++census.complete;
    if (census.min_length < 0 || length < census.min_length)
      census.min_length = length;
    census.max_length = std::max(census.max_length, length);
    return;
  }
  for (auto [u, v] : edges_in(b, alive)) {
    if (!bisimplicial_in(b, alive, u, v)) continue;
    if (!simple_vertex_in(b, alive, u) && !simple_vertex_in(b, alive, v))
      continue;
    Mask rest = alive & ~b.closed_neighborhood(u, v);
    census_rec(b, rest, iso_clean && isolated_in(b, rest) == 0, length + 1,
               census, cap);
  }
}

}  // namespace

SequenceCensus enumerate_simple_sequences(const Graph& b, long sequence_cap) {
  SequenceCensus census;
  census_rec(b, b.vertex_mask(), true, 0, census, sequence_cap);
  return census;
}

}  // namespace bct
