#pragma once

#include "egt/bitset.hpp"
#include "egt/graph.hpp"

#include <cstdint>
#include <optional>

namespace egt {

/// Node ceiling for the backtracking searches.  Exceeding it raises
/// budget_error, never a wrong answer.
struct SearchBudget {
    std::uint64_t node_limit = 200'000'000;
};

enum class CopyMode { Subgraph, Induced };

/// Exact count of injective maps V(H) -> V(G) preserving edges (and, in
/// induced mode, non-edges).  Labeled copies: automorphic images counted
/// separately.
std::uint64_t count_labeled_copies(const Graph& h, const Graph& g, CopyMode mode,
                                   const SearchBudget& budget = {});

bool contains_subgraph(const Graph& h, const Graph& g, const SearchBudget& budget = {});
bool contains_induced(const Graph& h, const Graph& g, const SearchBudget& budget = {});

/// Does G contain every n-vertex graph as an induced subgraph?  n <= 5.
bool universality_check(const Graph& g, int n, const SearchBudget& budget = {});

/// All non-isomorphic graphs on n labeled vertices, canonical representatives.
std::vector<Graph> graph_catalog(int n);

Bitset max_clique(const Graph& g, const SearchBudget& budget = {});
Bitset max_independent_set(const Graph& g, const SearchBudget& budget = {});

/// Smallest N <= nmax such that every red/blue coloring of E(K_N) contains a
/// red H1 or a blue H2; nullopt when no such N <= nmax.
std::optional<int> ramsey_exact(const Graph& h1, const Graph& h2, int nmax,
                                const SearchBudget& budget = {});

/// Minimum over all 2-colorings of K_N of the number of monochromatic
/// labeled copies of H.
std::uint64_t min_mono_copies(const Graph& h, int n, const SearchBudget& budget = {});

}  // namespace egt
