#include "egt/hypergraph.hpp"

#include "egt/errors.hpp"

#include <algorithm>

namespace egt {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)), inc_(n) {
    if (n < 0) throw precondition_error("Hypergraph: negative vertex count");
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
        auto& e = edges_[ei];
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw precondition_error("Hypergraph: repeated vertex in edge");
        for (int v : e) {
            if (v < 0 || v >= n)
                throw precondition_error("Hypergraph: vertex out of range");
            inc_[v].push_back(static_cast<int>(ei));
        }
        h_ = std::max(h_, static_cast<int>(e.size()));
    }
    for (int v = 0; v < n; ++v)
        maxdeg_ = std::max(maxdeg_, static_cast<int>(inc_[v].size()));
}

}  // namespace egt
