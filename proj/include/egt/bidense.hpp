#pragma once

#include "egt/bitset.hpp"
#include "egt/graph.hpp"
#include "egt/oracles.hpp"
#include "egt/rational.hpp"

namespace egt {

/// Outcome of the bi-dense pair search.  `found == false` means no pair was
/// located within the budget — a budget-relative absence report, never a
/// proof that no pair exists.
struct BidenseResult {
    bool found = false;
    Bitset w1, w2;
    std::uint64_t candidates_tried = 0;
};

/// True iff w1, w2 are disjoint, both of size >= z, and every w1 vertex has
/// at least (1 - 2 eps) |w2| neighbors in w2.
bool validate_bidense(const Graph& g, const Bitset& w1, const Bitset& w2, long z,
                      const Rational& epsilon);

/// Searches for such a pair by candidate refinement: seed B2 from common
/// neighborhoods of small sets, collect vertices with near-full degree into
/// B2 as B1, carve W1/W2 out of (B1, B2); falls back to a degree-greedy
/// construction.  Every returned pair is validated.
BidenseResult bidense_search(const Graph& g, long z, const Rational& epsilon,
                             const SearchBudget& budget = {});

}  // namespace egt
