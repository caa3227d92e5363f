#pragma once

#include "egt/graph.hpp"
#include "egt/rational.hpp"

#include <cstdint>
#include <utility>

namespace egt {

struct CutPartition {
    Bitset v1, v2;
    long cross_edges = 0;
};

/// Cross-edge count every returned equipartition must reach:
/// ceil(m * floor(N/2)^2 / C(N,2)).  For odd N the parts have sizes
/// ceil(N/2) and floor(N/2) and the floor(N/2)^2 numerator is used.
Int equipartition_cut_bound(const Graph& g);

/// Equipartition whose cross-edge count meets equipartition_cut_bound.
/// Randomized greedy start plus vertex-swap hill climbing; restarts until
/// the bound holds.  Throws degenerate_input_error for n < 2.
CutPartition balanced_max_cut_partition(const Graph& g, std::uint64_t seed);

}  // namespace egt
