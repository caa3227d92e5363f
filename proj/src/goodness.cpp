#include "egt/goodness.hpp"

#include "egt/errors.hpp"
#include "egt/rng.hpp"

#include <algorithm>

namespace egt {

namespace {

// Lexicographic successor of an r-combination of {0, ..., k-1}.
bool next_combination(std::vector<std::size_t>& c, std::size_t k) {
    const std::size_t r = c.size();
    for (std::size_t i = r; i > 0; --i) {
        if (c[i - 1] + 1 <= k - (r - i) - 1) {
            ++c[i - 1];
            for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t r) {
    std::vector<std::size_t> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = i;
    return c;
}

std::vector<int> merged(const std::vector<int>& base, const std::vector<int>& members,
                        const std::vector<std::size_t>& comb) {
    std::vector<int> full = base;
    for (std::size_t i : comb) full.push_back(members[i]);
    std::sort(full.begin(), full.end());
    return full;
}

void check_subset(const Bitset& universe, const std::vector<int>& s, long cap,
                  const char* who) {
    if (static_cast<long>(s.size()) > cap)
        throw precondition_error(std::string(who) + ": set larger than the target size");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || static_cast<std::size_t>(s[i]) >= universe.universe() ||
            !universe.test(static_cast<std::size_t>(s[i])))
            throw precondition_error(std::string(who) + ": vertex outside the universe");
        if (i > 0 && s[i] <= s[i - 1])
            throw precondition_error(std::string(who) + ": set must be sorted and distinct");
    }
}

}  // namespace

void NestedFamily::validate() const {
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        if (levels[i + 1].universe() != levels[i].universe() ||
            !levels[i + 1].is_subset_of(levels[i]))
            throw precondition_error("nested family: containment chain broken");
    }
    if (!colors.empty() && colors.size() != levels.size())
        throw precondition_error("nested family: color list length mismatch");
    if (!size_bounds.empty()) {
        if (size_bounds.size() != levels.size())
            throw precondition_error("nested family: size-bound list length mismatch");
        for (std::size_t i = 0; i < levels.size(); ++i)
            if (Int(levels[i].count()) < size_bounds[i])
                throw precondition_error("nested family: recorded size bound violated");
    }
}

GoodnessLedger::GoodnessLedger(Bitset universe, long target_size,
                               std::vector<Rational> budgets, BadPredicate bad,
                               std::uint64_t enum_budget)
    : universe_(std::move(universe)),
      d_(target_size),
      budgets_(std::move(budgets)),
      bad_(std::move(bad)),
      enum_budget_(enum_budget) {
    if (d_ < 1) throw precondition_error("goodness: target size must be positive");
    if (budgets_.size() != static_cast<std::size_t>(d_) + 1)
        throw precondition_error("goodness: need one budget per subset size 0..d");
    if (!bad_) throw precondition_error("goodness: missing bad-set predicate");
}

const GoodnessLedger::Counts& GoodnessLedger::counts_for(const std::vector<int>& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    check_subset(universe_, s, d_, "goodness");

    Bitset rest = universe_;
    for (int v : s) rest.reset(static_cast<std::size_t>(v));
    const std::vector<int> members = rest.to_vector();
    const std::size_t k = members.size();
    const std::size_t r = static_cast<std::size_t>(d_) - s.size();

    Counts c;
    c.total = 0;
    c.per_vertex.assign(universe_.universe(), Int(0));
    if (r <= k) {
        if (binomial(static_cast<long>(k), static_cast<long>(r)) > Int(enum_budget_))
            throw budget_error("goodness: superset enumeration exceeds budget");
        std::vector<std::size_t> comb = first_combination(r);
        do {
            if (bad_(merged(s, members, comb))) {
                ++c.total;
                for (std::size_t i : comb)
                    ++c.per_vertex[static_cast<std::size_t>(members[i])];
            }
        } while (r > 0 && next_combination(comb, k));
    }
    return memo_.emplace(s, std::move(c)).first->second;
}

Int GoodnessLedger::bad_extensions(const std::vector<int>& s) { return counts_for(s).total; }

bool GoodnessLedger::is_good(const std::vector<int>& s) {
    return Rational(bad_extensions(s)) < budget(static_cast<long>(s.size()));
}

Bitset GoodnessLedger::bad_vertices(const std::vector<int>& s) {
    if (static_cast<long>(s.size()) >= d_)
        throw precondition_error("goodness: bad_vertices needs |S| < d");
    // Bad D-supersets of S ∪ {v} are exactly the bad D-supersets of S
    // through v, so the memoized per-vertex counts decide every extension.
    const Counts& c = counts_for(s);
    const Rational& b = budget(static_cast<long>(s.size()) + 1);
    Bitset out(universe_.universe());
    Bitset rest = universe_;
    for (int v : s) rest.reset(static_cast<std::size_t>(v));
    rest.for_each([&](int v) {
        if (Rational(c.per_vertex[static_cast<std::size_t>(v)]) >= b)
            out.set(static_cast<std::size_t>(v));
    });
    return out;
}

BadCountEstimate GoodnessLedger::estimate_bad_extensions(const std::vector<int>& s,
                                                         std::uint64_t samples,
                                                         std::uint64_t seed) {
    check_subset(universe_, s, d_, "goodness");
    if (samples == 0) throw precondition_error("goodness: zero samples");
    Bitset rest = universe_;
    for (int v : s) rest.reset(static_cast<std::size_t>(v));
    const std::size_t r = static_cast<std::size_t>(d_) - s.size();
    if (rest.count() < r)
        throw precondition_error("goodness: universe too small to extend");
    Rng rng(seed);
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<int> ext = rng.sample_without_replacement(rest, r);
        std::vector<int> full = s;
        full.insert(full.end(), ext.begin(), ext.end());
        std::sort(full.begin(), full.end());
        if (bad_(full)) ++bad;
    }
    BadCountEstimate est;
    est.samples = samples;
    est.estimate = Rational(Int(bad), Int(samples)) *
                   binomial(static_cast<long>(rest.count()), static_cast<long>(r));
    return est;
}

std::vector<Rational> hypergraph_budgets(long n_host, long h, long d) {
    if (h < 1 || d < 1 || n_host < h)
        throw precondition_error("hypergraph_budgets: need N >= h >= 1, d >= 1");
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(h) + 1);
    for (long s = 0; s <= h; ++s) {
        Rational missing_allowance = rational_pow(Rational(1, 4 * d), h - s) *
                                     binomial(n_host, h - s);
        b.push_back(Rational(binomial(n_host - s, h - s)) -
                    Rational(binomial(n_host, h - s)) + missing_allowance);
    }
    return b;
}

std::vector<Rational> degenerate_budgets(long x, long d, long max_degree) {
    if (x < 1 || d < 1 || max_degree < 1)
        throw precondition_error("degenerate_budgets: need x, d, max degree >= 1");
    std::vector<Rational> b;
    b.reserve(static_cast<std::size_t>(d) + 1);
    for (long s = 0; s <= d; ++s)
        b.push_back(rational_pow(Rational(1, 2 * max_degree), d - s) * binomial(x, d - s));
    return b;
}

std::vector<Rational> arrangeable_budgets(long x, long p) {
    if (p < 1 || p > 60) throw precondition_error("arrangeable_budgets: p out of range");
    return degenerate_budgets(x, p, 1L << (p - 1));
}

std::vector<Rational> chromatic_budgets(long x, long d) { return degenerate_budgets(x, d, d); }

PairGoodnessLedger::PairGoodnessLedger(Bitset universe, long n, long m,
                                       BadPairPredicate bad, std::uint64_t enum_budget)
    : universe_(std::move(universe)), n_(n), m_(m), bad_(std::move(bad)),
      enum_budget_(enum_budget) {
    if (n_ < 1 || m_ < 1) throw precondition_error("pair goodness: need n, m >= 1");
    if (!bad_) throw precondition_error("pair goodness: missing bad-pair predicate");
}

Rational PairGoodnessLedger::budget(long s1, long s2) const {
    if (s1 < 0 || s1 > n_ || s2 < 0 || s2 > n_)
        throw precondition_error("pair goodness: sizes out of range");
    return rational_pow(Rational(1, 2 * n_), 2 * n_ - s1 - s2) * binomial(m_, n_ - s1) *
           binomial(m_, n_ - s2);
}

const PairGoodnessLedger::Counts& PairGoodnessLedger::counts_for(
    const std::vector<int>& u1, const std::vector<int>& u2) {
    auto key = std::make_pair(u1, u2);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    check_subset(universe_, u1, n_, "pair goodness");
    check_subset(universe_, u2, n_, "pair goodness");
    for (int v : u2)
        if (std::binary_search(u1.begin(), u1.end(), v))
            throw precondition_error("pair goodness: parts must be disjoint");

    Bitset rest = universe_;
    for (int v : u1) rest.reset(static_cast<std::size_t>(v));
    for (int v : u2) rest.reset(static_cast<std::size_t>(v));
    const std::vector<int> members = rest.to_vector();
    const std::size_t k = members.size();
    const std::size_t r1 = static_cast<std::size_t>(n_) - u1.size();
    const std::size_t r2 = static_cast<std::size_t>(n_) - u2.size();

    Counts c;
    c.total = 0;
    c.per_vertex_1.assign(universe_.universe(), Int(0));
    c.per_vertex_2.assign(universe_.universe(), Int(0));
    if (r1 + r2 <= k) {
        Int pairs = binomial(static_cast<long>(k), static_cast<long>(r1)) *
                    binomial(static_cast<long>(k - r1), static_cast<long>(r2));
        if (pairs > Int(enum_budget_))
            throw budget_error("pair goodness: pair enumeration exceeds budget");
        std::vector<std::size_t> c1 = first_combination(r1);
        do {
            std::vector<int> s1 = merged(u1, members, c1);
            std::vector<int> rest2;
            rest2.reserve(k - r1);
            for (std::size_t i = 0, j = 0; i < k; ++i) {
                if (j < r1 && c1[j] == i)
                    ++j;
                else
                    rest2.push_back(members[i]);
            }
            std::vector<std::size_t> c2 = first_combination(r2);
            do {
                std::vector<int> s2 = merged(u2, rest2, c2);
                if (bad_(s1, s2)) {
                    ++c.total;
                    for (std::size_t i : c1)
                        ++c.per_vertex_1[static_cast<std::size_t>(members[i])];
                    for (std::size_t i : c2)
                        ++c.per_vertex_2[static_cast<std::size_t>(rest2[i])];
                }
            } while (r2 > 0 && next_combination(c2, k - r1));
        } while (r1 > 0 && next_combination(c1, k));
    }
    return memo_.emplace(std::move(key), std::move(c)).first->second;
}

Int PairGoodnessLedger::bad_pair_extensions(const std::vector<int>& u1,
                                            const std::vector<int>& u2) {
    return counts_for(u1, u2).total;
}

bool PairGoodnessLedger::is_good(const std::vector<int>& u1, const std::vector<int>& u2) {
    return Rational(bad_pair_extensions(u1, u2)) <
           budget(static_cast<long>(u1.size()), static_cast<long>(u2.size()));
}

Bitset PairGoodnessLedger::bad_vertices(const std::vector<int>& u1,
                                        const std::vector<int>& u2, int side) {
    if (side != 1 && side != 2)
        throw precondition_error("pair goodness: side must be 1 or 2");
    const std::vector<int>& grown = (side == 1) ? u1 : u2;
    if (static_cast<long>(grown.size()) >= n_)
        throw precondition_error("pair goodness: extended side already full");
    const Counts& c = counts_for(u1, u2);
    const Rational b = budget(static_cast<long>(u1.size()) + (side == 1 ? 1 : 0),
                              static_cast<long>(u2.size()) + (side == 2 ? 1 : 0));
    const std::vector<Int>& pv = (side == 1) ? c.per_vertex_1 : c.per_vertex_2;
    Bitset out(universe_.universe());
    Bitset rest = universe_;
    for (int v : u1) rest.reset(static_cast<std::size_t>(v));
    for (int v : u2) rest.reset(static_cast<std::size_t>(v));
    rest.for_each([&](int v) {
        if (Rational(pv[static_cast<std::size_t>(v)]) >= b) out.set(static_cast<std::size_t>(v));
    });
    return out;
}

BadCountEstimate PairGoodnessLedger::estimate_bad_pairs(const std::vector<int>& u1,
                                                        const std::vector<int>& u2,
                                                        std::uint64_t samples,
                                                        std::uint64_t seed) {
    check_subset(universe_, u1, n_, "pair goodness");
    check_subset(universe_, u2, n_, "pair goodness");
    if (samples == 0) throw precondition_error("pair goodness: zero samples");
    Bitset rest = universe_;
    for (int v : u1) rest.reset(static_cast<std::size_t>(v));
    for (int v : u2) rest.reset(static_cast<std::size_t>(v));
    const std::size_t r1 = static_cast<std::size_t>(n_) - u1.size();
    const std::size_t r2 = static_cast<std::size_t>(n_) - u2.size();
    if (rest.count() < r1 + r2)
        throw precondition_error("pair goodness: universe too small to extend");
    Rng rng(seed);
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<int> e1 = rng.sample_without_replacement(rest, r1);
        Bitset rest2 = rest;
        for (int v : e1) rest2.reset(static_cast<std::size_t>(v));
        std::vector<int> e2 = rng.sample_without_replacement(rest2, r2);
        std::vector<int> s1 = u1, s2 = u2;
        s1.insert(s1.end(), e1.begin(), e1.end());
        s2.insert(s2.end(), e2.begin(), e2.end());
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (bad_(s1, s2)) ++bad;
    }
    const long k = static_cast<long>(rest.count());
    BadCountEstimate est;
    est.samples = samples;
    est.estimate = Rational(Int(bad), Int(samples)) *
                   binomial(k, static_cast<long>(r1)) *
                   binomial(k - static_cast<long>(r1), static_cast<long>(r2));
    return est;
}

}  // namespace egt
