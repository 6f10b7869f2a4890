#ifndef BCT_FAMILIES_HPP
#define BCT_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bct/graph.hpp"

namespace bct {

// Named graph families. Labelings are fixed conventions of this library;
// numeric parts are zero-padded to two digits so label order follows
// construction order.
//
//   K        n m   complete bipartite K_{n,m}, labels x01.., y01..
//   P        n     path on n vertices
//   C        k     cycle on k >= 3 vertices
//   star     q     K_{1,q}, center "c", leaves l01..
//   S222           long claw S(K_{1,3})
//   R        p n   n cycles C_p hung off a star, p >= 3, n >= 2
//   B4             base graph with a C_4 glued to every vertex (needs base)
//   Hn       n     K_{1,n} + K_{1,n+1} joined by a perfect matching a_i b_i
//   Bp       p     V = {a,b,c_i,d_i}, E = {ab, bc_i, c_i d_i, d_i a}
//   DS2            double star: two K_{1,2} centers joined by an edge
//   Hk       k     C_{6k} with two vertices at distance six identified, k >= 3
//   fig2           the 8-vertex planar convex bipartite grid graph
Graph generate_family(const std::string& name, const std::vector<int>& params,
                      const std::optional<Graph>& base = std::nullopt);

Graph complete_bipartite(int n, int m);
Graph path_graph(int n);
Graph cycle_graph(int k);
Graph star_graph(int q);
Graph long_claw();
Graph family_r(int p, int n);
Graph attach_c4_everywhere(const Graph& base);  // B(4)
Graph family_h_matching(int n);                 // H_n
Graph family_bp(int p);                         // B_p
Graph double_star();                            // DS_2
Graph family_h_cycle(int k);                    // H_k
Graph fig2_graph();

// Small gallery of Γ-family members used by the verification campaigns.
// Not part of the generate_family enum.
Graph gamma_gallery_prism();        // two hubs over three rungs
Graph gamma_gallery_prism_chord();  // same plus the hub-hub edge
Graph gamma_gallery_wide();         // three hubs over four rungs

std::string zero_pad2(int v);

}  // namespace bct

#endif
