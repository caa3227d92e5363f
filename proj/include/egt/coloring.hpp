#pragma once

#include "egt/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace egt {

/// Total assignment of one of k colors to every edge of a host graph.  The
/// color classes are stored as edge-disjoint graphs on the host's vertices
/// whose union is the host.  Colors are 0-based internally; the text format
/// writes them 1-based.
struct EdgeColoring {
    Graph host;
    std::vector<Graph> classes;

    int k() const { return static_cast<int>(classes.size()); }
    /// 0-based color of a host edge; -1 for non-edges.
    int color_of(int u, int v) const;
    /// Throws precondition_error unless the classes partition the host edges.
    void validate() const;
};

/// Uniform random color per edge.
EdgeColoring random_edge_coloring(const Graph& host, int k, std::uint64_t seed);
/// All edges in class `color` of a k-class coloring.
EdgeColoring monochromatic_coloring(const Graph& host, int k, int color);
EdgeColoring coloring_from_classes(Graph host, std::vector<Graph> classes);

/// Text format: `c <N> <k>` header, then one `<u> <v> <color>` line per
/// edge with 1-based colors; the host is the union of the listed edges.
void write_coloring(const EdgeColoring& c, std::ostream& out);
EdgeColoring parse_coloring(std::istream& in);
EdgeColoring parse_coloring_file(const std::string& path);
void write_coloring_file(const EdgeColoring& c, const std::string& path);

/// Exact chromatic number by branch and bound; optionally returns a proper
/// coloring as one class index per vertex.
int chromatic_number(const Graph& g, std::vector<int>* classes = nullptr);

}  // namespace egt
