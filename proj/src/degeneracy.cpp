#include "egt/degeneracy.hpp"

#include "egt/errors.hpp"

#include <algorithm>

namespace egt {

DegeneracyResult degeneracy_order(const Graph& h) {
    const int n = h.n();
    std::vector<int> deg(n);
    Bitset alive(static_cast<std::size_t>(n), true);
    for (int v = 0; v < n; ++v) deg[v] = h.degree(v);

    std::vector<int> removal;
    removal.reserve(n);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        alive.for_each([&](int v) {
            if (best == -1 || deg[v] < deg[best]) best = v;
        });
        d = std::max(d, deg[best]);
        alive.reset(best);
        removal.push_back(best);
        Bitset nb = h.row(best);
        nb &= alive;
        nb.for_each([&](int v) { --deg[v]; });
    }
    std::reverse(removal.begin(), removal.end());
    return {std::move(removal), d};
}

bool verify_arrangeable(const Graph& h, const std::vector<int>& ordering, int p) {
    const int n = h.n();
    if (static_cast<int>(ordering.size()) != n)
        throw precondition_error("verify_arrangeable: ordering size mismatch");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (ordering[i] < 0 || ordering[i] >= n || pos[ordering[i]] != -1)
            throw precondition_error("verify_arrangeable: not a permutation");
        pos[ordering[i]] = i;
    }
    Bitset left(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        left.set(ordering[i]);  // left set includes v_i itself
        Bitset united(static_cast<std::size_t>(n));
        h.row(ordering[i]).for_each([&](int w) {
            if (pos[w] > i) {
                Bitset b = h.row(w);
                b &= left;
                united |= b;
            }
        });
        if (static_cast<int>(united.count()) > p) return false;
    }
    return true;
}

}  // namespace egt
