#include "egt/generators.hpp"

#include "egt/degeneracy.hpp"
#include "egt/errors.hpp"
#include "egt/rng.hpp"

#include <set>

namespace egt {

Graph hypercube(int d) {
    if (d < 1 || d > 20) throw precondition_error("hypercube: d out of [1,20]");
    const int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

BipartiteGraph one_subdivision(const Graph& h) {
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) == 0)
            throw precondition_error("one_subdivision: isolated vertex");
    auto es = h.edges();
    BipartiteGraph b(h.n(), static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i) {
        b.add_edge(es[i].first, static_cast<int>(i));
        b.add_edge(es[i].second, static_cast<int>(i));
    }
    return b;
}

Graph random_graph(int n, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw precondition_error("random_graph: p outside [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

BipartiteGraph random_bipartite(int n1, int n2, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw precondition_error("random_bipartite: p outside [0,1]");
    Rng rng(seed);
    BipartiteGraph g(n1, n2);
    for (int l = 0; l < n1; ++l)
        for (int r = 0; r < n2; ++r)
            if (rng.bernoulli(p)) g.add_edge(l, r);
    return g;
}

BipartiteGraph random_bipartite(int n, const Rational& p, std::uint64_t seed) {
    return random_bipartite(n, n, p, seed);
}

Graph paley(int q) {
    auto is_prime = [](int x) {
        if (x < 2) return false;
        for (int f = 2; static_cast<long>(f) * f <= x; ++f)
            if (x % f == 0) return false;
        return true;
    };
    if (!is_prime(q) || q % 4 != 1)
        throw precondition_error("paley: q must be a prime congruent to 1 mod 4");
    std::set<int> squares;
    for (int x = 1; x < q; ++x) squares.insert(static_cast<int>((static_cast<long>(x) * x) % q));
    Graph g(q);
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            if (squares.count(((y - x) % q + q) % q)) g.add_edge(x, y);
    return g;
}

Graph random_d_degenerate(int n, int d, int max_degree_cap, std::uint64_t seed) {
    if (d < 1 || d >= n) throw precondition_error("random_d_degenerate: need 1 <= d < n");
    if (max_degree_cap < d)
        throw precondition_error("random_d_degenerate: cap below d is infeasible");
    Rng rng(seed);
    Graph g(n);
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        int want = std::min(d, v);
        Bitset eligible(static_cast<std::size_t>(n));
        for (int u = 0; u < v; ++u)
            if (deg[u] < max_degree_cap) eligible.set(u);
        if (static_cast<int>(eligible.count()) < want)
            throw precondition_error(
                "random_d_degenerate: degree cap leaves too few eligible neighbors");
        for (int u : rng.sample_without_replacement(eligible, want)) {
            g.add_edge(u, v);
            ++deg[u];
            ++deg[v];
        }
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

BipartiteGraph complete_bipartite(int n1, int n2) {
    BipartiteGraph g(n1, n2);
    for (int l = 0; l < n1; ++l)
        for (int r = 0; r < n2; ++r) g.add_edge(l, r);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw precondition_error("cycle_graph: n < 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace egt
