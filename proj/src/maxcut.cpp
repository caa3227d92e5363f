#include "egt/maxcut.hpp"

#include "egt/errors.hpp"

#include "egt/rng.hpp"

#include <algorithm>
#include <numeric>

namespace egt {

Int equipartition_cut_bound(const Graph& g) {
    if (g.n() < 2) throw degenerate_input_error("cut bound: need n >= 2");
    Int half = g.n() / 2;
    return ceil_int(Rational(Int(g.m()) * half * half, binomial(g.n(), 2)));
}

namespace {

long count_cross(const Graph& g, const Bitset& v1) {
    long c = 0;
    v1.for_each([&](int u) {
        Bitset r = g.row(u);
        r.and_not(v1);
        c += static_cast<long>(r.count());
    });
    return c;
}

// First-improvement swap hill climbing; stops as soon as the cut reaches
// `target` or no swap improves it.
long hill_climb(const Graph& g, Bitset& v1, const Int& target) {
    const int n = g.n();
    Bitset v2 = v1.complemented();
    std::vector<int> deg(n), deg_same(n);
    auto recompute = [&](int v) {
        const Bitset& own = v1.test(v) ? v1 : v2;
        deg_same[v] = static_cast<int>(g.row(v).count_and(own));
    };
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        recompute(v);
    }
    long cross = count_cross(g, v1);
    while (Int(cross) < target) {
        bool improved = false;
        std::vector<int> ones = v1.to_vector();
        std::vector<int> twos = v2.to_vector();
        for (int u : ones) {
            for (int w : twos) {
                long gain = (2 * deg_same[u] - deg[u]) + (2 * deg_same[w] - deg[w]) +
                            2 * (g.has_edge(u, w) ? 1 : 0);
                if (gain > 0) {
                    v1.reset(u);
                    v1.set(w);
                    v2.set(u);
                    v2.reset(w);
                    for (int v = 0; v < n; ++v) recompute(v);
                    cross += gain;
                    improved = true;
                    break;
                }
            }
            if (improved) break;
        }
        if (!improved) break;  // swap-local optimum
    }
    return cross;
}

}  // namespace

CutPartition balanced_max_cut_partition(const Graph& g, std::uint64_t seed) {
    const int n = g.n();
    if (n < 2) throw degenerate_input_error("balanced_max_cut_partition: n < 2");
    const Int bound = equipartition_cut_bound(g);
    const int cap1 = (n + 1) / 2, cap2 = n / 2;

    Rng rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);

        // Greedy: each vertex joins the side maximizing edges cut so far,
        // respecting part capacities.
        Bitset v1(static_cast<std::size_t>(n)), v2(static_cast<std::size_t>(n));
        int c1 = 0, c2 = 0;
        for (int v : order) {
            long to1 = static_cast<long>(g.row(v).count_and(v1));
            long to2 = static_cast<long>(g.row(v).count_and(v2));
            bool pick1;
            if (c1 >= cap1)
                pick1 = false;
            else if (c2 >= cap2)
                pick1 = true;
            else if (to2 != to1)
                pick1 = to2 > to1;  // joining part 1 cuts the edges into part 2
            else
                pick1 = (cap1 - c1) >= (cap2 - c2);
            if (pick1) {
                v1.set(v);
                ++c1;
            } else {
                v2.set(v);
                ++c2;
            }
        }
        long cross = hill_climb(g, v1, bound);
        if (Int(cross) >= bound)
            return {v1, v1.complemented(), cross};
    }
    throw witness_not_found_error(
        "balanced_max_cut_partition: bound not reached after restarts");
}

}  // namespace egt
