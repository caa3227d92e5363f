#include "egt/drc.hpp"

#include "egt/errors.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <cmath>

namespace egt {

namespace {

void check_params(const BipartiteGraph& g, const DrcParams& p) {
    if (g.left_size() != g.right_size())
        throw precondition_error("drc: parts must have equal size");
    if (p.a < 1 || p.d < 1 || p.t < 1 || p.x < 1)
        throw precondition_error("drc: a, d, t, x must be positive");
    if (p.epsilon <= 0 || p.epsilon > 1)
        throw precondition_error("drc: epsilon must lie in (0, 1]");
    const long n = g.left_size();
    if (p.d > n) throw precondition_error("drc: d exceeds |V2|");
    if (Rational(g.m()) < p.epsilon * Int(n) * Int(n))
        throw precondition_error("drc: host density below epsilon");
}

// 2^{-1/a} as a rational, exact for a = 1 and a 60-bit binary approximation
// otherwise (only the recorded bound is approximate; the pass/fail verdicts
// are decided by the exact power-a comparison).
Rational half_root(long a) {
    if (a == 1) return Rational(1, 2);
    const long double v = std::exp2(-1.0L / static_cast<long double>(a));
    const Int den = Int(1) << 60;
    Int num = static_cast<long long>(v * 1152921504606846976.0L);  // v * 2^60
    return Rational(num, den);
}

// True iff |N(S)| < x for the right-vertex subset S.
bool subset_is_bad(const BipartiteGraph& g, const std::vector<int>& members,
                   const std::vector<std::size_t>& comb, long x) {
    Bitset cur(static_cast<std::size_t>(g.left_size()), true);
    for (std::size_t i : comb) {
        cur &= g.right_row(members[i]);
        if (static_cast<long>(cur.count()) < x) return true;
    }
    return false;
}

// Colexicographic successor of a d-combination of {0, ..., k-1} by index.
bool next_combination(std::vector<std::size_t>& c, std::size_t k) {
    const std::size_t d = c.size();
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t cap = (i + 1 < d) ? c[i + 1] : k;
        if (c[i] + 1 < cap) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

// Colex unranking: the rank of {c_0 < ... < c_{d-1}} is sum C(c_i, i+1).
std::vector<std::size_t> unrank_colex(Int rank, std::size_t k, std::size_t d) {
    std::vector<std::size_t> c(d);
    for (std::size_t i = d; i > 0; --i) {
        std::size_t v = i - 1;
        for (std::size_t cand = i - 1; cand < k; ++cand) {
            if (binomial(static_cast<long>(cand), static_cast<long>(i)) <= rank)
                v = cand;
            else
                break;
        }
        c[i - 1] = v;
        rank -= binomial(static_cast<long>(v), static_cast<long>(i));
        k = v;
    }
    return c;
}

DrcOutcome outcome_for(const BipartiteGraph& g, const DrcParams& p, std::vector<int> t_draws,
                       std::uint64_t enum_budget) {
    const long n = g.left_size();
    Bitset support(static_cast<std::size_t>(n));
    for (int v : t_draws) support.set(v);

    DrcOutcome out;
    out.T = std::move(t_draws);
    out.A = g.common_neighbors_of_left(support);
    const long asz = static_cast<long>(out.A.count());
    out.bad_count = (asz < p.d) ? Int(0) : count_bad_dsets(g, out.A, p.d, p.x, enum_budget);

    const Rational eps_ta = rational_pow(p.epsilon, p.t * p.a);
    out.size_bound = half_root(p.a) * rational_pow(p.epsilon, p.t) * n;
    out.size_ok = 2 * rational_pow(Rational(asz), p.a) >= eps_ta * rational_pow(Rational(n), p.a);
    out.bad_bound = 2 / eps_ta * rational_pow(Rational(p.x, n), p.t) *
                    rational_pow(Rational(asz, n), p.a) * binomial(n, p.d);
    out.bad_ok = Rational(out.bad_count) <= out.bad_bound;
    return out;
}

}  // namespace

Int count_bad_dsets_range(const BipartiteGraph& g, const Bitset& a, long d, long x,
                          const Int& rank_begin, const Int& rank_end) {
    if (d < 1) throw precondition_error("count_bad_dsets: d must be positive");
    const std::vector<int> members = a.to_vector();
    const std::size_t k = members.size();
    if (static_cast<long>(k) < d) throw precondition_error("count_bad_dsets: d exceeds |A|");
    const Int total = binomial(static_cast<long>(k), d);
    if (rank_begin < 0 || rank_end > total || rank_begin > rank_end)
        throw precondition_error("count_bad_dsets_range: rank range out of bounds");
    if (rank_begin == rank_end) return 0;

    std::vector<std::size_t> comb =
        unrank_colex(rank_begin, k, static_cast<std::size_t>(d));
    Int bad = 0;
    for (Int r = rank_begin; r < rank_end; ++r) {
        if (subset_is_bad(g, members, comb, x)) ++bad;
        if (!next_combination(comb, k)) break;
    }
    return bad;
}

Int count_bad_dsets(const BipartiteGraph& g, const Bitset& a, long d, long x,
                    std::uint64_t enum_budget) {
    if (d < 1) throw precondition_error("count_bad_dsets: d must be positive");
    if (static_cast<long>(a.count()) < d)
        throw precondition_error("count_bad_dsets: d exceeds |A|");
    const Int total = binomial(static_cast<long>(a.count()), d);
    if (total > Int(enum_budget))
        throw budget_error("count_bad_dsets: C(|A|,d) exceeds the enumeration budget");
    return count_bad_dsets_range(g, a, d, x, 0, total);
}

BadCountEstimate estimate_bad_dsets(const BipartiteGraph& g, const Bitset& a, long d,
                                    long x, std::uint64_t samples, std::uint64_t seed) {
    if (d < 1 || static_cast<long>(a.count()) < d)
        throw precondition_error("estimate_bad_dsets: need 1 <= d <= |A|");
    if (samples == 0) throw precondition_error("estimate_bad_dsets: zero samples");
    const std::vector<int> members = a.to_vector();
    Rng rng(seed);
    std::uint64_t bad = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::vector<int> pickv =
            rng.sample_without_replacement(a, static_cast<std::size_t>(d));
        Bitset cur(static_cast<std::size_t>(g.left_size()), true);
        bool is_bad = false;
        for (int v : pickv) {
            cur &= g.right_row(v);
            if (static_cast<long>(cur.count()) < x) {
                is_bad = true;
                break;
            }
        }
        if (is_bad) ++bad;
    }
    BadCountEstimate est;
    est.samples = samples;
    est.estimate =
        Rational(Int(bad), Int(samples)) * binomial(static_cast<long>(a.count()), d);
    return est;
}

DrcOutcome drc_sample(const BipartiteGraph& g, const DrcParams& p, std::uint64_t seed,
                      std::uint64_t enum_budget) {
    check_params(g, p);
    Rng rng(seed);
    const std::uint64_t n = static_cast<std::uint64_t>(g.left_size());
    std::vector<int> draws;
    draws.reserve(static_cast<std::size_t>(p.t));
    for (long i = 0; i < p.t; ++i) draws.push_back(static_cast<int>(rng.below(n)));
    return outcome_for(g, p, std::move(draws), enum_budget);
}

Rational drc_expectation_exact(const BipartiteGraph& g, long t) {
    if (g.left_size() != g.right_size())
        throw precondition_error("drc_expectation_exact: parts must have equal size");
    if (t < 1) throw precondition_error("drc_expectation_exact: t must be positive");
    const long n = g.left_size();
    if (n == 0) throw degenerate_input_error("drc_expectation_exact: empty host");
    Int sum = 0;
    for (int v = 0; v < n; ++v) {
        Int dt = 1;
        for (long i = 0; i < t; ++i) dt *= g.right_degree(v);
        sum += dt;
    }
    Int nt = 1;
    for (long i = 0; i < t; ++i) nt *= n;
    return Rational(sum, nt);
}

DrcOutcome drc_find_witness(const BipartiteGraph& g, const DrcParams& p,
                            std::uint64_t max_trials, std::uint64_t seed,
                            std::uint64_t enum_budget) {
    check_params(g, p);
    Rng base(seed);
    for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
        DrcOutcome out = drc_sample(g, p, base.fork(trial).seed(), enum_budget);
        if (out.size_ok && out.bad_ok) return out;
    }

    // A depends only on the support of T, so enumerating supports of size
    // 1..t covers every reachable outcome.
    const long n = g.left_size();
    Int candidates = 0;
    for (long s = 1; s <= std::min(p.t, n); ++s) candidates += binomial(n, s);
    if (candidates > Int(enum_budget))
        throw witness_not_found_error(
            "drc_find_witness: sampling failed and exhaustive fallback exceeds budget");

    for (long s = 1; s <= std::min(p.t, n); ++s) {
        std::vector<std::size_t> comb(static_cast<std::size_t>(s));
        for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
        do {
            std::vector<int> draws;
            draws.reserve(static_cast<std::size_t>(p.t));
            std::vector<std::size_t> sorted = comb;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t c : sorted) draws.push_back(static_cast<int>(c));
            while (static_cast<long>(draws.size()) < p.t) draws.push_back(draws.back());
            DrcOutcome out = outcome_for(g, p, std::move(draws), enum_budget);
            if (out.size_ok && out.bad_ok) return out;
        } while (next_combination(comb, static_cast<std::size_t>(n)));
    }
    throw witness_not_found_error("drc_find_witness: no multiset satisfies both bounds");
}

}  // namespace egt
