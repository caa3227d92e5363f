#pragma once

// Backtracking internals shared by the copy-counting oracles and the
// exhaustive Ramsey coloring searches.  Not installed; src-local only.

#include "egt/bitset.hpp"
#include "egt/errors.hpp"
#include "egt/graph.hpp"
#include "egt/oracles.hpp"

#include <cstdint>
#include <vector>

namespace egt::detail {

struct NodeCounter {
    std::uint64_t nodes = 0;
    std::uint64_t limit;
    explicit NodeCounter(const SearchBudget& b) : limit(b.node_limit) {}
    void tick() {
        if (++nodes > limit) throw budget_error("search: node budget exceeded");
    }
};

// Pattern-vertex order maximizing the number of already-placed neighbors at
// each step, so candidate sets shrink as early as possible.
inline std::vector<int> connectivity_order(const Graph& h, const std::vector<int>& pinned) {
    const int n = h.n();
    std::vector<bool> placed(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int v : pinned) {
        placed[v] = true;
        order.push_back(v);
    }
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int back = 0;
            for (int u : order)
                if (h.has_edge(u, v)) ++back;
            if (back > best_back || (back == best_back && h.degree(v) > best_deg)) {
                best = v;
                best_back = back;
                best_deg = h.degree(v);
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

// Core backtracker.  `order` lists pattern vertices; the first `depth` of
// them are pre-assigned in `f`.  In counting mode returns the number of
// completions; in decision mode stops at the first one.
inline std::uint64_t extend(const Graph& h, const Graph& g, CopyMode mode,
                            const std::vector<int>& order, std::size_t depth,
                            std::vector<int>& f, Bitset& used, bool decision_only,
                            NodeCounter& nc) {
    nc.tick();
    if (depth == order.size()) return 1;
    const int hv = order[depth];
    Bitset cand(static_cast<std::size_t>(g.n()), true);
    for (std::size_t i = 0; i < depth; ++i) {
        const int hu = order[i];
        if (h.has_edge(hu, hv))
            cand &= g.row(f[hu]);
        else if (mode == CopyMode::Induced) {
            Bitset non = g.row(f[hu]).complemented();
            cand &= non;
        }
    }
    cand.and_not(used);

    // The last level has no branching left: its candidates multiply out.
    if (!decision_only && depth + 1 == order.size()) return cand.count();

    std::uint64_t total = 0;
    for (int w = cand.first(); w >= 0; w = cand.next(static_cast<std::size_t>(w))) {
        f[hv] = w;
        used.set(static_cast<std::size_t>(w));
        std::uint64_t sub = extend(h, g, mode, order, depth + 1, f, used, decision_only, nc);
        used.reset(static_cast<std::size_t>(w));
        f[hv] = -1;
        total += sub;
        if (decision_only && total > 0) return total;
    }
    return total;
}

// Labeled copies of h lying entirely in `host` that use the host edge
// (u, v): anchored on each directed pattern edge, so each such copy is
// counted exactly once.
inline std::uint64_t copies_through_edge(const Graph& h, const Graph& host, int u, int v,
                                         bool decision_only, NodeCounter& nc) {
    std::uint64_t total = 0;
    for (auto [a, b] : h.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            const int pa = flip ? b : a, pb = flip ? a : b;
            std::vector<int> order = connectivity_order(h, {pa, pb});
            std::vector<int> f(h.n(), -1);
            f[pa] = u;
            f[pb] = v;
            Bitset used(static_cast<std::size_t>(host.n()));
            used.set(static_cast<std::size_t>(u));
            used.set(static_cast<std::size_t>(v));
            total += extend(h, host, CopyMode::Subgraph, order, 2, f, used,
                            decision_only, nc);
            if (decision_only && total > 0) return total;
        }
    }
    return total;
}

}  // namespace egt::detail
