#include "egt/io.hpp"

#include "egt/errors.hpp"

#include <fstream>
#include <sstream>

namespace egt {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw io_error("line " + std::to_string(line) + ": " + what);
}

void write_edges(const Graph& g, std::ostream& out) {
    out << "p " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

struct EdgeListParse {
    bool bipartite = false;
    int n1 = 0, n2 = 0;
    Graph g;
};

EdgeListParse parse_edge_list(std::istream& in) {
    EdgeListParse r;
    std::string line;
    int lineno = 0;
    long declared_m = -1;
    int n = -1;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;  // blank line
        if (tok == "b") {
            if (n != -1) fail(lineno, "b header after p header");
            if (!(ss >> r.n1 >> r.n2) || r.n1 < 1 || r.n2 < 1)
                fail(lineno, "malformed b header");
            r.bipartite = true;
        } else if (tok == "p") {
            if (n != -1) fail(lineno, "duplicate p header");
            if (!(ss >> n >> declared_m) || n < 0 || declared_m < 0)
                fail(lineno, "malformed p header");
            if (r.bipartite && n != r.n1 + r.n2)
                fail(lineno, "p header inconsistent with b header");
            r.g = Graph(n);
        } else {
            if (n == -1) fail(lineno, "edge before p header");
            int u, v;
            std::istringstream es(line);
            if (!(es >> u >> v)) fail(lineno, "malformed edge line");
            if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex out of range");
            if (u == v) fail(lineno, "self-loop");
            if (r.g.has_edge(u, v)) fail(lineno, "duplicate edge");
            if (r.bipartite && (u < r.n1) == (v < r.n1))
                fail(lineno, "edge inside one part of a bipartite graph");
            r.g.add_edge(u, v);
            ++seen;
        }
    }
    if (n == -1) throw io_error("missing p header");
    if (seen != declared_m)
        throw io_error("edge count mismatch: header says " +
                       std::to_string(declared_m) + ", file has " + std::to_string(seen));
    return r;
}

}  // namespace

void write_graph(const Graph& g, std::ostream& out) { write_edges(g, out); }

void write_graph(const BipartiteGraph& g, std::ostream& out) {
    out << "b " << g.left_size() << " " << g.right_size() << "\n";
    write_edges(g.to_graph(), out);
}

void write_graph_file(const AnyGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    std::visit([&](const auto& gg) { write_graph(gg, out); }, g);
}

AnyGraph parse_graph(std::istream& in) {
    EdgeListParse p = parse_edge_list(in);
    if (!p.bipartite) return p.g;
    BipartiteGraph b(p.n1, p.n2);
    for (auto [u, v] : p.g.edges()) {
        int l = std::min(u, v), r = std::max(u, v);
        b.add_edge(l, r - p.n1);
    }
    return b;
}

AnyGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open: " + path);
    // Peek the first non-space character to pick the format.
    char c;
    if (!(in >> c)) throw io_error("empty file: " + path);
    in.putback(c);
    if (c == 'p' || c == 'b') return parse_graph(in);
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    return from_graph6(line);
}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string s;
    if (n < 63) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw io_error("graph6: graph too large");
    }
    int bit = 5;
    char cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                s.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    }
    if (bit != 5) s.push_back(static_cast<char>(cur + 63));
    return s;
}

Graph from_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw io_error("graph6: truncated");
        int c = static_cast<unsigned char>(s[pos++]) - 63;
        if (c < 0 || c > 63) throw io_error("graph6: byte out of range");
        return c;
    };
    int n;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw io_error("graph6: >36-bit sizes unsupported");
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    Graph g(n);
    int bit = -1, cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit < 0) {
                cur = next();
                bit = 5;
            }
            if ((cur >> bit) & 1) g.add_edge(u, v);
            --bit;
        }
    }
    return g;
}

}  // namespace egt
