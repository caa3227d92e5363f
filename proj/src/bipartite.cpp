#include "egt/bipartite.hpp"

#include "egt/errors.hpp"

namespace egt {

BipartiteGraph::BipartiteGraph(int n1, int n2)
    : n1_(n1), n2_(n2),
      left_(n1, Bitset(static_cast<std::size_t>(n2))),
      right_(n2, Bitset(static_cast<std::size_t>(n1))) {
    if (n1 < 1 || n2 < 1)
        throw precondition_error("BipartiteGraph: both parts must be nonempty");
}

void BipartiteGraph::add_edge(int l, int r) {
    if (l < 0 || r < 0 || l >= n1_ || r >= n2_)
        throw precondition_error("add_edge: vertex out of range");
    if (!left_[l].test(r)) {
        left_[l].set(r);
        right_[r].set(l);
        ++m_;
    }
}

int BipartiteGraph::max_degree() const {
    int d = 0;
    for (int l = 0; l < n1_; ++l) d = std::max(d, left_degree(l));
    for (int r = 0; r < n2_; ++r) d = std::max(d, right_degree(r));
    return d;
}

Bitset BipartiteGraph::common_neighbors_of_left(const Bitset& l_set) const {
    Bitset r(static_cast<std::size_t>(n2_), true);
    l_set.for_each([&](int l) { r &= left_[l]; });
    return r;
}

Bitset BipartiteGraph::common_neighbors_of_right(const Bitset& r_set) const {
    Bitset l(static_cast<std::size_t>(n1_), true);
    r_set.for_each([&](int r) { l &= right_[r]; });
    return l;
}

Rational BipartiteGraph::density() const {
    return Rational(Int(m_), Int(n1_) * Int(n2_));
}

Graph BipartiteGraph::to_graph() const {
    Graph g(n1_ + n2_);
    for (int l = 0; l < n1_; ++l)
        left_[l].for_each([&](int r) { g.add_edge(l, n1_ + r); });
    return g;
}

BipartiteGraph bipartite_from_partition(const Graph& g, const Bitset& v1,
                                        std::vector<int>* left_ids,
                                        std::vector<int>* right_ids) {
    std::vector<int> lid = v1.to_vector();
    std::vector<int> rid = v1.complemented().to_vector();
    if (lid.empty() || rid.empty())
        throw precondition_error("bipartite_from_partition: empty part");
    std::vector<int> rpos(g.n(), -1);
    for (std::size_t j = 0; j < rid.size(); ++j) rpos[rid[j]] = static_cast<int>(j);
    BipartiteGraph b(static_cast<int>(lid.size()), static_cast<int>(rid.size()));
    for (std::size_t i = 0; i < lid.size(); ++i) {
        Bitset cross = g.row(lid[i]);
        cross.and_not(v1);
        cross.for_each([&](int v) { b.add_edge(static_cast<int>(i), rpos[v]); });
    }
    if (left_ids) *left_ids = std::move(lid);
    if (right_ids) *right_ids = std::move(rid);
    return b;
}

}  // namespace egt
