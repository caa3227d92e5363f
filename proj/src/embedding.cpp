#include "egt/embedding.hpp"

#include "egt/errors.hpp"

#include <set>

namespace egt {

namespace {

void check_injective(const Embedding& f, int pattern_n, int host_n) {
    if (static_cast<int>(f.map.size()) != pattern_n)
        throw invalid_embedding_error("embedding not total on pattern vertices");
    std::set<int> seen;
    for (int v : f.map) {
        if (v < 0 || v >= host_n)
            throw invalid_embedding_error("embedding image out of host range");
        if (!seen.insert(v).second)
            throw invalid_embedding_error("embedding not injective");
    }
}

}  // namespace

bool validate_embedding(const Graph& pattern, const Graph& host, const Embedding& f) {
    check_injective(f, pattern.n(), host.n());
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(f.map[u], f.map[v])) return false;
    return true;
}

bool validate_embedding_induced(const Graph& pattern, const Graph& g,
                                const Graph& f_graph, const Embedding& f) {
    check_injective(f, pattern.n(), g.n());
    if (f_graph.n() != g.n())
        throw precondition_error("induced validation: G and F vertex sets differ");
    for (int u = 0; u < pattern.n(); ++u) {
        for (int v = u + 1; v < pattern.n(); ++v) {
            if (pattern.has_edge(u, v)) {
                if (!g.has_edge(f.map[u], f.map[v])) return false;
            } else {
                if (!f_graph.has_edge(f.map[u], f.map[v])) return false;
            }
        }
    }
    return true;
}

bool validate_embedding_parts(const BipartiteGraph& pattern,
                              const BipartiteGraph& host, const Embedding& f) {
    check_injective(f, pattern.total(), host.total());
    for (int l = 0; l < pattern.left_size(); ++l)
        if (f.map[l] >= host.left_size()) return false;
    for (int r = 0; r < pattern.right_size(); ++r)
        if (f.map[pattern.left_size() + r] < host.left_size()) return false;
    for (int l = 0; l < pattern.left_size(); ++l) {
        bool ok = true;
        pattern.left_row(l).for_each([&](int r) {
            int hl = f.map[l];
            int hr = f.map[pattern.left_size() + r] - host.left_size();
            if (!host.has_edge(hl, hr)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace egt
