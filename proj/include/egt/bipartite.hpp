#pragma once

#include "egt/bitset.hpp"
#include "egt/graph.hpp"
#include "egt/rational.hpp"

#include <vector>

namespace egt {

/// Two-part graph with explicit part membership.  Vertices are part-local:
/// left 0..n1-1, right 0..n2-1.  In a global numbering (used by file IO and
/// embeddings into whole graphs) right vertex j is n1 + j.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int n1, int n2);

    int left_size() const { return n1_; }
    int right_size() const { return n2_; }
    int total() const { return n1_ + n2_; }
    long m() const { return m_; }

    void add_edge(int l, int r);
    bool has_edge(int l, int r) const { return left_[l].test(r); }

    const Bitset& left_row(int l) const { return left_[l]; }    // bits over right
    const Bitset& right_row(int r) const { return right_[r]; }  // bits over left

    int left_degree(int l) const { return static_cast<int>(left_[l].count()); }
    int right_degree(int r) const { return static_cast<int>(right_[r].count()); }
    int max_degree() const;

    /// N(L) for L a set of left vertices: right vertices adjacent to all of L.
    /// Empty L gives all of the right part.
    Bitset common_neighbors_of_left(const Bitset& l_set) const;
    Bitset common_neighbors_of_right(const Bitset& r_set) const;

    /// e / (n1 * n2), exact.
    Rational density() const;

    /// Globally-indexed undirected view (left then right).
    Graph to_graph() const;

    bool operator==(const BipartiteGraph& o) const = default;

private:
    int n1_ = 0, n2_ = 0;
    long m_ = 0;
    std::vector<Bitset> left_, right_;
};

/// Keeps exactly the edges of g crossing (v1, complement of v1).
/// left part = v1 members in increasing order, right part = the rest.
/// The original vertex ids are returned through the id maps.
BipartiteGraph bipartite_from_partition(const Graph& g, const Bitset& v1,
                                        std::vector<int>* left_ids = nullptr,
                                        std::vector<int>* right_ids = nullptr);

}  // namespace egt
