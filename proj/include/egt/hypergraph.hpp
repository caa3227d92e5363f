#pragma once

#include <vector>

namespace egt {

/// Vertex set 0..n-1 plus an edge list of vertex sets, with bounded edge
/// size h and bounded vertex degree.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    int edge_size_bound() const { return h_; }  // h
    int max_degree() const { return maxdeg_; }  // d

    /// Edges containing vertex v (indices into edges()).
    const std::vector<int>& incident(int v) const { return inc_[v]; }

private:
    int n_ = 0;
    int h_ = 0;
    int maxdeg_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> inc_;
};

}  // namespace egt
