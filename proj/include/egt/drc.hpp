#pragma once

#include "egt/bipartite.hpp"
#include "egt/bitset.hpp"
#include "egt/rational.hpp"

#include <cstdint>
#include <vector>

namespace egt {

/// Parameters of one dependent-random-choice run on a balanced bipartite
/// host with parts of size N: sample t vertices of V1 with repetition, take
/// their common neighborhood A in V2, and count the d-subsets of A whose own
/// common neighborhood is smaller than x.
struct DrcParams {
    long a = 1;        // moment exponent in the size bound
    long d = 1;        // size of the audited subsets of A
    long t = 1;        // sample size
    long x = 1;        // common-neighborhood threshold
    Rational epsilon;  // host density lower bound, in (0, 1]
};

struct DrcOutcome {
    std::vector<int> T;   // sampled multiset of left vertices, in draw order
    Bitset A;             // common neighborhood of T's support, over V2
    Int bad_count = 0;    // d-sets S of A with |N(S)| < x
    Rational size_bound;  // 2^{-1/a} eps^t N (approximate when a > 1)
    Rational bad_bound;   // 2 eps^{-ta} (x/N)^t (|A|/N)^a C(N,d), exact
    bool size_ok = false;  // 2 |A|^a >= eps^{ta} N^a, decided exactly
    bool bad_ok = false;   // bad_count <= bad_bound, decided exactly
};

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

/// One sampled outcome.  Rejects unequal parts and density below epsilon.
DrcOutcome drc_sample(const BipartiteGraph& g, const DrcParams& p, std::uint64_t seed,
                      std::uint64_t enum_budget = kDefaultEnumBudget);

/// E|N(T)| for t independent uniform draws: N^{-t} sum_v |N(v)|^t, exact.
Rational drc_expectation_exact(const BipartiteGraph& g, long t);

/// First outcome satisfying both the size and the bad-count inequality;
/// samples max_trials times, then falls back to exhaustive enumeration of
/// candidate supports when that is within budget.
DrcOutcome drc_find_witness(const BipartiteGraph& g, const DrcParams& p,
                            std::uint64_t max_trials, std::uint64_t seed,
                            std::uint64_t enum_budget = kDefaultEnumBudget);

/// Exact number of d-subsets S of A (a set of right vertices) with
/// |N(S)| < x.  Enumerates C(|A|, d) subsets; throws budget_error beyond
/// enum_budget.
Int count_bad_dsets(const BipartiteGraph& g, const Bitset& a, long d, long x,
                    std::uint64_t enum_budget = kDefaultEnumBudget);

/// The same count restricted to colexicographic subset ranks
/// [rank_begin, rank_end).  Partial counts over a partition of
/// [0, C(|A|,d)) sum to the full count, independent of the partition.
Int count_bad_dsets_range(const BipartiteGraph& g, const Bitset& a, long d, long x,
                          const Int& rank_begin, const Int& rank_end);

/// Monte-Carlo estimate of count_bad_dsets for hosts beyond the enumeration
/// budget.  Always flagged as sampled; never a substitute for the exact
/// count unless requested.
struct BadCountEstimate {
    Rational estimate;
    std::uint64_t samples = 0;
    bool sampled = true;
};
BadCountEstimate estimate_bad_dsets(const BipartiteGraph& g, const Bitset& a, long d,
                                    long x, std::uint64_t samples, std::uint64_t seed);

}  // namespace egt
