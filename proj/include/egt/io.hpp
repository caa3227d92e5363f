#pragma once

#include "egt/bipartite.hpp"
#include "egt/graph.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace egt {

using AnyGraph = std::variant<Graph, BipartiteGraph>;

/// Edge-list text format: `p <n> <m>` then `<u> <v>` per edge, 0-indexed.
/// Bipartite files start with a `b <n1> <n2>` header line before the `p`
/// line; their vertex ids are global (left part first).
void write_graph(const Graph& g, std::ostream& out);
void write_graph(const BipartiteGraph& g, std::ostream& out);
void write_graph_file(const AnyGraph& g, const std::string& path);

AnyGraph parse_graph(std::istream& in);
/// Dispatches on content: edge-list headers, otherwise graph6.
AnyGraph parse_graph_file(const std::string& path);

/// graph6 per the published format (N(n) + upper-triangle bits, columnwise).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

}  // namespace egt
