#pragma once

#include "egt/bitset.hpp"
#include "egt/rational.hpp"

#include <utility>
#include <vector>

namespace egt {

/// Dense undirected graph over integer vertices with bit-row adjacency.
/// Symmetric, loop-free; multi-edges are impossible by representation.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    long m() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return rows_[u].test(v); }

    const Bitset& row(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(rows_[v].count()); }
    int max_degree() const;

    Bitset vertices() const { return Bitset(n_, true); }

    Graph complement() const;
    /// Subgraph induced on `keep`, vertices relabeled densely in increasing
    /// order.  Returns the relabeling old->new position via `old_ids`.
    Graph induced(const Bitset& keep, std::vector<int>* old_ids = nullptr) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<Bitset> rows_;
};

/// {w : w adjacent to every u in U}; N(empty) is all vertices.
Bitset common_neighborhood(const Graph& g, const Bitset& u);

/// m / C(n,2), exact.  Throws degenerate_input_error for n < 2.
Rational edge_density(const Graph& g);

/// e(A,B)/(|A||B|) counting ordered pairs; A, B nonempty, may overlap.
Rational density_between(const Graph& g, const Bitset& a, const Bitset& b);

}  // namespace egt
