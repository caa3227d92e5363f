#pragma once

#include "egt/bipartite.hpp"
#include "egt/graph.hpp"
#include "egt/rational.hpp"

#include <cstdint>

namespace egt {

/// Q_d: 2^d vertices, adjacent iff the indices differ in one bit.  1 <= d <= 20.
Graph hypercube(int d);

/// Replaces every edge by a path of length 2.  Left part U1 = V(H) in order,
/// right part U2 = E(H) in lexicographic order.  H must have no isolated
/// vertices.
BipartiteGraph one_subdivision(const Graph& h);

/// G(n,p): each pair independently an edge with probability p.
Graph random_graph(int n, const Rational& p, std::uint64_t seed);
BipartiteGraph random_bipartite(int n, const Rational& p, std::uint64_t seed);
BipartiteGraph random_bipartite(int n1, int n2, const Rational& p, std::uint64_t seed);

/// Paley graph on F_q, q prime, q = 1 mod 4: x ~ y iff x - y is a square.
Graph paley(int q);

/// Vertex i picks exactly min(d, i) uniformly random earlier neighbors,
/// subject to the max-degree cap.  Certified d-degenerate by construction.
Graph random_d_degenerate(int n, int d, int max_degree_cap, std::uint64_t seed);

/// Complete graph / complete bipartite, for tests and corpora.
Graph complete_graph(int n);
BipartiteGraph complete_bipartite(int n1, int n2);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace egt
