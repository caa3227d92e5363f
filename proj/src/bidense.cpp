#include "egt/bidense.hpp"

#include "egt/errors.hpp"

#include <algorithm>
#include <vector>

namespace egt {

bool validate_bidense(const Graph& g, const Bitset& w1, const Bitset& w2, long z,
                      const Rational& epsilon) {
    if (w1.intersects(w2)) return false;
    if (static_cast<long>(w1.count()) < z || static_cast<long>(w2.count()) < z)
        return false;
    const Rational need = (1 - 2 * epsilon) * Int(w2.count());
    bool ok = true;
    w1.for_each([&](int v) {
        if (Rational(g.row(v).count_and(w2)) < need) ok = false;
    });
    return ok;
}

namespace {

struct SearchState {
    const Graph& g;
    long z;
    const Rational& epsilon;
    std::uint64_t charge = 0;
    std::uint64_t limit;
    BidenseResult out;

    bool charged_out() {
        charge += static_cast<std::uint64_t>(g.n());
        return charge > limit;
    }

    // Extract (W1, W2) from a near-complete pair (B1, B2): W1 takes z
    // vertices of B1, W2 is B2 with those removed.
    bool try_b2(const Bitset& b2) {
        ++out.candidates_tried;
        if (static_cast<long>(b2.count()) < 2 * z) return false;
        const Rational need = (1 - epsilon) * Int(b2.count());
        Bitset b1(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            if (Rational(g.row(v).count_and(b2)) >= need)
                b1.set(static_cast<std::size_t>(v));
        if (static_cast<long>(b1.count()) < z) return false;
        Bitset w1(static_cast<std::size_t>(g.n()));
        long taken = 0;
        for (int v = b1.first(); v >= 0 && taken < z;
             v = b1.next(static_cast<std::size_t>(v))) {
            w1.set(static_cast<std::size_t>(v));
            ++taken;
        }
        Bitset w2 = b2;
        w2.and_not(w1);
        if (!validate_bidense(g, w1, w2, z, epsilon)) return false;
        out.found = true;
        out.w1 = w1;
        out.w2 = w2;
        return true;
    }
};

}  // namespace

BidenseResult bidense_search(const Graph& g, long z, const Rational& epsilon,
                             const SearchBudget& budget) {
    if (z < 1) throw precondition_error("bidense_search: z must be >= 1");
    if (epsilon <= 0 || epsilon >= Rational(1, 2))
        throw precondition_error("bidense_search: epsilon outside (0, 1/2)");
    SearchState st{g, z, epsilon, 0, budget.node_limit, {}};

    std::vector<int> by_degree(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) by_degree[static_cast<std::size_t>(v)] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    // Candidate B2 sets: the whole vertex set, then single-vertex and
    // adjacent-pair common neighborhoods in decreasing degree order.
    if (st.try_b2(g.vertices())) return st.out;
    for (int v : by_degree) {
        if (st.charged_out()) return st.out;
        if (st.try_b2(g.row(v))) return st.out;
    }
    for (int u : by_degree) {
        for (int v = g.row(u).first(); v >= 0; v = g.row(u).next(static_cast<std::size_t>(v))) {
            if (v <= u) continue;
            if (st.charged_out()) return st.out;
            if (st.try_b2(g.row(u) & g.row(v))) return st.out;
        }
    }

    // Degree-greedy fallback: W2 = top-degree z-set, W1 = the z best
    // outsiders by degree into W2.
    if (g.n() >= 2 * z) {
        Bitset w2(static_cast<std::size_t>(g.n()));
        for (long i = 0; i < z; ++i)
            w2.set(static_cast<std::size_t>(by_degree[static_cast<std::size_t>(i)]));
        std::vector<int> rest;
        for (int v : by_degree)
            if (!w2.test(static_cast<std::size_t>(v))) rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
            return g.row(a).count_and(w2) > g.row(b).count_and(w2);
        });
        Bitset w1(static_cast<std::size_t>(g.n()));
        for (long i = 0; i < z && i < static_cast<long>(rest.size()); ++i)
            w1.set(static_cast<std::size_t>(rest[static_cast<std::size_t>(i)]));
        ++st.out.candidates_tried;
        if (validate_bidense(g, w1, w2, z, epsilon)) {
            st.out.found = true;
            st.out.w1 = w1;
            st.out.w2 = w2;
        }
    }
    return st.out;
}

}  // namespace egt
