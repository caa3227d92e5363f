#include "egt/graph.hpp"

#include "egt/errors.hpp"

namespace egt {

Graph::Graph(int n) : n_(n), rows_(n, Bitset(static_cast<std::size_t>(n))) {
    if (n < 0) throw precondition_error("Graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw precondition_error("add_edge: vertex out of range");
    if (u == v) throw precondition_error("add_edge: self-loop rejected");
    if (!rows_[u].test(v)) {
        rows_[u].set(v);
        rows_[v].set(u);
        ++m_;
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph Graph::induced(const Bitset& keep, std::vector<int>* old_ids) const {
    std::vector<int> ids = keep.to_vector();
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Bitset r = rows_[ids[i]];
        r &= keep;
        r.for_each([&](int v) {
            if (pos[v] > static_cast<int>(i)) g.add_edge(static_cast<int>(i), pos[v]);
        });
    }
    if (old_ids) *old_ids = std::move(ids);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v))
            e.emplace_back(u, v);
    }
    return e;
}

Bitset common_neighborhood(const Graph& g, const Bitset& u) {
    Bitset r(static_cast<std::size_t>(g.n()), true);
    u.for_each([&](int v) { r &= g.row(v); });
    return r;
}

Rational edge_density(const Graph& g) {
    if (g.n() < 2) throw degenerate_input_error("edge_density: need n >= 2");
    return Rational(Int(g.m()), binomial(g.n(), 2));
}

Rational density_between(const Graph& g, const Bitset& a, const Bitset& b) {
    if (a.none() || b.none())
        throw degenerate_input_error("density_between: empty side");
    Int e = 0;
    a.for_each([&](int v) { e += static_cast<long>(g.row(v).count_and(b)); });
    return Rational(e, Int(a.count()) * Int(b.count()));
}

}  // namespace egt
