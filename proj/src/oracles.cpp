#include "egt/oracles.hpp"

#include "egt/errors.hpp"
#include "search_internal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace egt {

using detail::NodeCounter;

namespace {

std::uint64_t run_search(const Graph& h, const Graph& g, CopyMode mode, bool decision_only,
                         const SearchBudget& budget) {
    if (h.n() == 0) return 1;
    if (h.n() > g.n()) return 0;
    NodeCounter nc(budget);
    std::vector<int> order = detail::connectivity_order(h, {});
    std::vector<int> f(h.n(), -1);
    Bitset used(static_cast<std::size_t>(g.n()));
    return detail::extend(h, g, mode, order, 0, f, used, decision_only, nc);
}

}  // namespace

std::uint64_t count_labeled_copies(const Graph& h, const Graph& g, CopyMode mode,
                                   const SearchBudget& budget) {
    return run_search(h, g, mode, false, budget);
}

bool contains_subgraph(const Graph& h, const Graph& g, const SearchBudget& budget) {
    return run_search(h, g, CopyMode::Subgraph, true, budget) > 0;
}

bool contains_induced(const Graph& h, const Graph& g, const SearchBudget& budget) {
    return run_search(h, g, CopyMode::Induced, true, budget) > 0;
}

std::vector<Graph> graph_catalog(int n) {
    if (n < 1 || n > 5) throw precondition_error("graph_catalog: n must be in [1,5]");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto signature = [&](const Graph& g, const std::vector<int>& p) {
        std::uint32_t sig = 0;
        for (int i = 0; i < np; ++i)
            if (g.has_edge(p[pairs[i].first], p[pairs[i].second])) sig |= 1u << i;
        return sig;
    };

    std::set<std::uint32_t> seen;
    std::vector<Graph> catalog;
    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
        Graph g(n);
        for (int i = 0; i < np; ++i)
            if (mask & (1u << i)) g.add_edge(pairs[i].first, pairs[i].second);
        std::uint32_t canon = ~0u;
        for (const auto& p : perms) canon = std::min(canon, signature(g, p));
        if (seen.insert(canon).second) catalog.push_back(g);
    }
    return catalog;
}

bool universality_check(const Graph& g, int n, const SearchBudget& budget) {
    for (const Graph& h : graph_catalog(n))
        if (!contains_induced(h, g, budget)) return false;
    return true;
}

namespace {

// Branch and bound with a greedy-coloring upper bound (vertices colorable
// with c colors cannot host a clique larger than c).
void clique_search(const Graph& g, std::vector<int>& current, Bitset& cand, Bitset& best,
                   NodeCounter& nc) {
    nc.tick();
    if (cand.none()) {
        if (current.size() > best.count())
            best = Bitset::from_vector(static_cast<std::size_t>(g.n()), current);
        return;
    }
    std::vector<int> verts = cand.to_vector();
    std::vector<int> color(verts.size());
    std::vector<Bitset> classes;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::size_t c = 0;
        while (c < classes.size() && g.row(verts[i]).intersects(classes[c])) ++c;
        if (c == classes.size()) classes.emplace_back(static_cast<std::size_t>(g.n()));
        classes[c].set(static_cast<std::size_t>(verts[i]));
        color[i] = static_cast<int>(c) + 1;
    }
    for (std::size_t i = verts.size(); i > 0; --i) {
        const int v = verts[i - 1];
        if (current.size() + static_cast<std::size_t>(color[i - 1]) <= best.count()) return;
        current.push_back(v);
        Bitset next = cand & g.row(v);
        for (std::size_t j = i - 1; j < verts.size(); ++j)
            next.reset(static_cast<std::size_t>(verts[j]));
        clique_search(g, current, next, best, nc);
        current.pop_back();
    }
}

}  // namespace

Bitset max_clique(const Graph& g, const SearchBudget& budget) {
    if (g.n() == 0) return Bitset(0);
    NodeCounter nc(budget);
    Bitset best(static_cast<std::size_t>(g.n()));
    std::vector<int> current;
    Bitset cand(static_cast<std::size_t>(g.n()), true);
    clique_search(g, current, cand, best, nc);
    return best;
}

Bitset max_independent_set(const Graph& g, const SearchBudget& budget) {
    return max_clique(g.complement(), budget);
}

}  // namespace egt
