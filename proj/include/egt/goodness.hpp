#pragma once

#include "egt/bitset.hpp"
#include "egt/drc.hpp"
#include "egt/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace egt {

/// Ordered chain A_1 ⊇ A_2 ⊇ … ⊇ A_k with optional per-level metadata.
struct NestedFamily {
    std::vector<Bitset> levels;
    std::vector<int> colors;      // empty, or one color per level
    std::vector<Int> size_bounds; // empty, or one claimed lower bound per level

    /// Throws precondition_error unless the containment chain and the
    /// recorded size bounds hold.
    void validate() const;
};

/// The shared goodness bookkeeping of the embedding greedies.  Over a fixed
/// universe W, a "bad" predicate on D-subsets, and a per-size budget family,
/// a set S with |S| <= D is good iff the number of bad D-supersets of S
/// inside W is strictly below budget[|S|].  (For |S| = D the only superset
/// is S itself, so good there means not bad.)  All verdicts are memoized
/// and recomputable from scratch with identical results.
class GoodnessLedger {
public:
    using BadPredicate = std::function<bool(const std::vector<int>&)>;

    GoodnessLedger(Bitset universe, long target_size, std::vector<Rational> budgets,
                   BadPredicate bad, std::uint64_t enum_budget = kDefaultEnumBudget);

    const Bitset& universe() const { return universe_; }
    long target_size() const { return d_; }
    const Rational& budget(long s) const { return budgets_.at(static_cast<std::size_t>(s)); }

    /// Number of bad D-supersets of s within the universe, exact.
    Int bad_extensions(const std::vector<int>& s);

    bool is_good(const std::vector<int>& s);

    /// Vertices v of the universe, v not in s, with s ∪ {v} not good.
    /// Defined for good s with |s| < D.
    Bitset bad_vertices(const std::vector<int>& s);

    /// Monte-Carlo estimate of bad_extensions, flagged as sampled.
    BadCountEstimate estimate_bad_extensions(const std::vector<int>& s,
                                             std::uint64_t samples, std::uint64_t seed);

    /// Drops all memoized counts (verdicts are recomputed on demand).
    void clear_memo() { memo_.clear(); }

private:
    struct Counts {
        Int total;                  // bad D-supersets of the key
        std::vector<Int> per_vertex; // ... containing each universe vertex
    };
    const Counts& counts_for(const std::vector<int>& s);

    Bitset universe_;
    long d_;
    std::vector<Rational> budgets_;
    BadPredicate bad_;
    std::uint64_t enum_budget_;
    std::map<std::vector<int>, Counts> memo_;
};

/// Budget families for the ledger, one per greedy flavor.
/// Hypergraph flavor: a set of size s must lie in more than
/// (1 − (4d)^{s−h}) C(N, h−s) nice h-sets, i.e. its bad h-superset count
/// must stay below C(N−s, h−s) − (1 − (4d)^{s−h}) C(N, h−s).
std::vector<Rational> hypergraph_budgets(long n_host, long h, long d);
/// Degenerate flavor: (2Δ)^{s−d} C(x, d−s).
std::vector<Rational> degenerate_budgets(long x, long d, long max_degree);
/// Arrangeable flavor: degenerate with the 2^{p−1} tracked-set bound as Δ.
std::vector<Rational> arrangeable_budgets(long x, long p);
/// Chromatic flavor: (2d)^{s−d} C(x, d−s).
std::vector<Rational> chromatic_budgets(long x, long d);

/// Pair-mode ledger for simultaneous adjacency in two edge-disjoint graphs:
/// a pair (U1, U2) of disjoint subsets of the universe is good iff fewer
/// than (2n)^{|U1|+|U2|−2n} C(m, n−|U1|) C(m, n−|U2|) disjoint pairs
/// (S1 ⊇ U1, S2 ⊇ U2) of n-sets are bad.
class PairGoodnessLedger {
public:
    /// bad(s1, s2) decides the pair of disjoint n-sets.
    using BadPairPredicate =
        std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

    PairGoodnessLedger(Bitset universe, long n, long m, BadPairPredicate bad,
                       std::uint64_t enum_budget = kDefaultEnumBudget);

    const Bitset& universe() const { return universe_; }
    Rational budget(long s1, long s2) const;

    Int bad_pair_extensions(const std::vector<int>& u1, const std::vector<int>& u2);
    bool is_good(const std::vector<int>& u1, const std::vector<int>& u2);

    /// Vertices w with (U1 ∪ {w}, U2) bad (side = 1) or (U1, U2 ∪ {w}) bad
    /// (side = 2).  Defined for good pairs with the extended side below n.
    Bitset bad_vertices(const std::vector<int>& u1, const std::vector<int>& u2, int side);

    BadCountEstimate estimate_bad_pairs(const std::vector<int>& u1,
                                        const std::vector<int>& u2,
                                        std::uint64_t samples, std::uint64_t seed);

private:
    struct Counts {
        Int total;
        std::vector<Int> per_vertex_1, per_vertex_2;
    };
    const Counts& counts_for(const std::vector<int>& u1, const std::vector<int>& u2);

    Bitset universe_;
    long n_, m_;
    BadPairPredicate bad_;
    std::uint64_t enum_budget_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Counts> memo_;
};

}  // namespace egt
