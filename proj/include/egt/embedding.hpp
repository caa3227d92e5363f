#pragma once

#include "egt/bipartite.hpp"
#include "egt/graph.hpp"

#include <vector>

namespace egt {

enum class EmbedMode { Subgraph, InducedPair, PartRespecting };

/// Injective map pattern-vertex -> host-vertex.  `map[i]` is the host image
/// of pattern vertex i.  For part-respecting embeddings both pattern and
/// host use the global numbering (left part first).
struct Embedding {
    std::vector<int> map;
    EmbedMode mode = EmbedMode::Subgraph;
};

/// Subgraph mode: every pattern edge maps to a host edge.
/// Throws invalid_embedding_error when f is not injective or not total.
bool validate_embedding(const Graph& pattern, const Graph& host, const Embedding& f);

/// Induced-pair mode: pattern edges land in G, pattern non-edges land in F.
bool validate_embedding_induced(const Graph& pattern, const Graph& g,
                                const Graph& f_graph, const Embedding& f);

/// Part-respecting mode: subgraph condition plus f(U_i) inside V_i.
bool validate_embedding_parts(const BipartiteGraph& pattern,
                              const BipartiteGraph& host, const Embedding& f);

}  // namespace egt
