#include "egt/oracles.hpp"

#include "egt/errors.hpp"
#include "search_internal.hpp"

namespace egt {

using detail::NodeCounter;

namespace {

struct RamseyState {
    int n;
    std::vector<std::pair<int, int>> edges;
    Graph red, blue;
    const Graph *h_red, *h_blue;
    bool symmetric;
    NodeCounter* nc;
};

Graph without_edge(const Graph& g, int u, int v) {
    Graph out(g.n());
    for (auto [a, b] : g.edges())
        if (!(a == u && b == v) && !(a == v && b == u)) out.add_edge(a, b);
    return out;
}

// True iff some complete 2-coloring of K_n avoids both target copies.
bool coloring_avoids(RamseyState& st, std::size_t idx) {
    st.nc->tick();
    if (idx == st.edges.size()) return true;
    auto [u, v] = st.edges[idx];
    for (int color = 0; color < 2; ++color) {
        if (st.symmetric && idx == 0 && color == 1) break;  // first edge red wlog
        Graph& gc = color == 0 ? st.red : st.blue;
        const Graph* target = color == 0 ? st.h_red : st.h_blue;
        gc.add_edge(u, v);
        bool completed = detail::copies_through_edge(*target, gc, u, v, true, *st.nc) > 0;
        if (!completed && coloring_avoids(st, idx + 1)) return true;
        gc = without_edge(gc, u, v);
    }
    return false;
}

bool is_ramsey(const Graph& h1, const Graph& h2, int n, NodeCounter& nc) {
    if (h1.m() == 0 || h2.m() == 0)
        throw precondition_error("ramsey_exact: targets must have at least one edge");
    RamseyState st{n, {}, Graph(n), Graph(n), &h1, &h2, h1 == h2, &nc};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) st.edges.emplace_back(u, v);
    return !coloring_avoids(st, 0);
}

}  // namespace

std::optional<int> ramsey_exact(const Graph& h1, const Graph& h2, int nmax,
                                const SearchBudget& budget) {
    NodeCounter nc(budget);
    for (int n = 1; n <= nmax; ++n)
        if (is_ramsey(h1, h2, n, nc)) return n;
    return std::nullopt;
}

namespace {

struct MinMonoState {
    int n;
    std::vector<std::pair<int, int>> edges;
    Graph red, blue;
    const Graph* h;
    std::uint64_t best;
    NodeCounter* nc;
};

// Copies completed so far never decrease when more edges are colored, so
// the running count is a sound lower bound for pruning.
void min_mono_search(MinMonoState& st, std::size_t idx, std::uint64_t completed) {
    st.nc->tick();
    if (completed >= st.best) return;
    if (idx == st.edges.size()) {
        st.best = completed;
        return;
    }
    auto [u, v] = st.edges[idx];
    for (int color = 0; color < 2; ++color) {
        if (idx == 0 && color == 1) break;  // color swap symmetry
        Graph& gc = color == 0 ? st.red : st.blue;
        gc.add_edge(u, v);
        std::uint64_t fresh = detail::copies_through_edge(*st.h, gc, u, v, false, *st.nc);
        min_mono_search(st, idx + 1, completed + fresh);
        gc = without_edge(gc, u, v);
    }
}

}  // namespace

std::uint64_t min_mono_copies(const Graph& h, int n, const SearchBudget& budget) {
    if (h.m() == 0) throw precondition_error("min_mono_copies: target needs an edge");
    NodeCounter nc(budget);
    MinMonoState st{n, {}, Graph(n), Graph(n), &h, ~0ull, &nc};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) st.edges.emplace_back(u, v);
    min_mono_search(st, 0, 0);
    return st.best;
}

}  // namespace egt
