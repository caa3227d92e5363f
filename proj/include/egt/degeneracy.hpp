#pragma once

#include "egt/graph.hpp"

#include <vector>

namespace egt {

struct DegeneracyResult {
    std::vector<int> order;  // v_1..v_n; each v_i has <= d neighbors earlier
    int d = 0;
};

/// Min-degree peel; the reversed removal order witnesses the degeneracy.
DegeneracyResult degeneracy_order(const Graph& h);

/// p-arrangeability of a given ordering: for every i, the right-neighbors
/// of v_i together have at most p neighbors in {v_1..v_i}.
bool verify_arrangeable(const Graph& h, const std::vector<int>& ordering, int p);

}  // namespace egt
