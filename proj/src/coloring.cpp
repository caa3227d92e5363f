#include "egt/coloring.hpp"

#include "egt/errors.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace egt {

int EdgeColoring::color_of(int u, int v) const {
    if (!host.has_edge(u, v)) return -1;
    for (int c = 0; c < k(); ++c)
        if (classes[static_cast<std::size_t>(c)].has_edge(u, v)) return c;
    return -1;
}

void EdgeColoring::validate() const {
    if (classes.empty()) throw precondition_error("EdgeColoring: k must be >= 1");
    long colored = 0;
    for (const Graph& cls : classes) {
        if (cls.n() != host.n())
            throw precondition_error("EdgeColoring: class order differs from host");
        colored += cls.m();
        for (auto [u, v] : cls.edges())
            if (!host.has_edge(u, v))
                throw precondition_error("EdgeColoring: class edge outside the host");
    }
    // Edge-disjointness then follows from the count matching exactly.
    if (colored != host.m())
        throw precondition_error("EdgeColoring: classes do not partition the host edges");
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            for (int v = 0; v < host.n(); ++v)
                if (classes[i].row(v).intersects(classes[j].row(v)))
                    throw precondition_error("EdgeColoring: classes share an edge");
}

EdgeColoring coloring_from_classes(Graph host, std::vector<Graph> classes) {
    EdgeColoring c{std::move(host), std::move(classes)};
    c.validate();
    return c;
}

EdgeColoring random_edge_coloring(const Graph& host, int k, std::uint64_t seed) {
    if (k < 1) throw precondition_error("random_edge_coloring: k must be >= 1");
    EdgeColoring c;
    c.host = host;
    c.classes.assign(static_cast<std::size_t>(k), Graph(host.n()));
    Rng rng(seed);
    for (auto [u, v] : host.edges())
        c.classes[rng.below(static_cast<std::uint64_t>(k))].add_edge(u, v);
    return c;
}

EdgeColoring monochromatic_coloring(const Graph& host, int k, int color) {
    if (k < 1 || color < 0 || color >= k)
        throw precondition_error("monochromatic_coloring: color outside [0,k)");
    EdgeColoring c;
    c.host = host;
    c.classes.assign(static_cast<std::size_t>(k), Graph(host.n()));
    c.classes[static_cast<std::size_t>(color)] = host;
    return c;
}

void write_coloring(const EdgeColoring& c, std::ostream& out) {
    out << "c " << c.host.n() << ' ' << c.k() << '\n';
    for (int j = 0; j < c.k(); ++j)
        for (auto [u, v] : c.classes[static_cast<std::size_t>(j)].edges())
            out << u << ' ' << v << ' ' << (j + 1) << '\n';
}

EdgeColoring parse_coloring(std::istream& in) {
    std::string line;
    long lineno = 0;
    int n = -1, k = -1;
    EdgeColoring c;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            char tag;
            if (!(ls >> tag >> n >> k) || tag != 'c' || n < 0 || k < 1)
                throw io_error("coloring: bad header at line " + std::to_string(lineno));
            c.host = Graph(n);
            c.classes.assign(static_cast<std::size_t>(k), Graph(n));
            continue;
        }
        int u, v, color;
        if (!(ls >> u >> v >> color))
            throw io_error("coloring: malformed line " + std::to_string(lineno));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw io_error("coloring: vertex out of range at line " + std::to_string(lineno));
        if (u == v)
            throw io_error("coloring: self-loop at line " + std::to_string(lineno));
        if (color < 1 || color > k)
            throw io_error("coloring: color out of range at line " + std::to_string(lineno));
        if (c.host.has_edge(u, v))
            throw io_error("coloring: duplicate edge at line " + std::to_string(lineno));
        c.host.add_edge(u, v);
        c.classes[static_cast<std::size_t>(color - 1)].add_edge(u, v);
    }
    if (n < 0) throw io_error("coloring: missing header");
    return c;
}

EdgeColoring parse_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("coloring: cannot open " + path);
    return parse_coloring(in);
}

void write_coloring_file(const EdgeColoring& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("coloring: cannot open " + path + " for writing");
    write_coloring(c, out);
}

namespace {

bool color_rec(const Graph& g, const std::vector<int>& order, std::size_t idx,
               std::vector<int>& assign, int q) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    // Cap the palette at (colors used so far) + 1 to kill permutation
    // symmetry among the color classes.
    int used = 0;
    for (std::size_t i = 0; i < idx; ++i) used = std::max(used, assign[order[i]] + 1);
    const int limit = std::min(q, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        g.row(v).for_each([&](int u) {
            if (assign[static_cast<std::size_t>(u)] == c) ok = false;
        });
        if (!ok) continue;
        assign[static_cast<std::size_t>(v)] = c;
        if (color_rec(g, order, idx + 1, assign, q)) return true;
        assign[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g, std::vector<int>* classes) {
    if (g.n() == 0) {
        if (classes) classes->clear();
        return 0;
    }
    // Decreasing-degree order tends to fail early for infeasible q.
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int q = 1; q <= g.n(); ++q) {
        std::vector<int> assign(static_cast<std::size_t>(g.n()), -1);
        if (color_rec(g, order, 0, assign, q)) {
            if (classes) *classes = assign;
            return q;
        }
    }
    throw invalid_embedding_error("chromatic_number: unreachable");
}

}  // namespace egt
