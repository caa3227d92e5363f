#pragma once

#include "egt/bidense.hpp"
#include "egt/coloring.hpp"
#include "egt/embedders.hpp"
#include "egt/pseudorandom.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace egt {

/// Driver outcome: the selected color class plus the embedding attempt in
/// it, with the materialized chain level sizes for auditing.
struct ColoredEmbedResult {
    int color = -1;
    EmbedResult result;
    std::vector<long> chain_sizes;
};

/// Monochromatic copy of h in a 2-coloring of a complete host: nested chain
/// by halving + densest color + dependent random choice, pigeonhole color
/// selection, then the chromatic greedy.  allow_undersized runs best-effort
/// below the size precondition.
ColoredEmbedResult mono_embed_2color(const Graph& h, const EdgeColoring& coloring,
                                     std::uint64_t seed, bool allow_undersized = false);

/// Majority color class + the dense bipartite embedder with epsilon = 1/k.
/// One pattern per color; the pattern of the selected class is embedded.
ColoredEmbedResult multicolor_bipartite_driver(const std::vector<BipartiteGraph>& hs,
                                               const EdgeColoring& coloring,
                                               std::uint64_t seed);

/// Either a complete bipartite pair (side1, side2 of size t each), an
/// independent set of size t (in side1), or an honest failure.
struct EhOutcome {
    enum class Kind { Biclique, IndependentSet, Failure } kind = Kind::Failure;
    Bitset side1, side2;
    std::string diagnostic;
};
EhOutcome erdos_hajnal_driver(const Graph& g, long t, const SearchBudget& budget = {});

/// Largest clique X in w1 plus largest clique Y in the common neighborhood
/// of X inside w2; X ∪ Y is verified to be a clique.
std::pair<Bitset, Bitset> clique_or_independent_step(const Graph& g, const Bitset& w1,
                                                     const Bitset& w2,
                                                     const SearchBudget& budget = {});

/// Monochromatic induced copy of h in a k-coloring of a pseudo-random host:
/// nested chain via densest color + dependent random choice (t = 4n),
/// pigeonhole color, then the induced-pair greedy against the host's
/// complement.  m and epsilon are caller-scale parameters.
ColoredEmbedResult induced_ramsey_driver(const Graph& h, const Graph& gamma,
                                         const EdgeColoring& coloring,
                                         const PseudoRandomCertificate& cert, long m,
                                         const Rational& epsilon, std::uint64_t seed);

}  // namespace egt
