#include "egt/degeneracy.hpp"
#include "egt/drc.hpp"
#include "egt/embedders.hpp"
#include "egt/errors.hpp"
#include "egt/maxcut.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <cmath>

namespace egt {

namespace {

// Side (1 or 2) of a pattern vertex in the global numbering of a bipartite
// pattern (left part first).
int side_of(const BipartiteGraph& h, int global_v) {
    return global_v < h.left_size() ? 1 : 2;
}

}  // namespace

EmbedResult embed_bidegenerate_core_ordered(
    const BipartiteGraph& h, const std::vector<int>& order, const BipartiteGraph& host,
    const Bitset& a1, const Bitset& a2, long x, long target_size,
    long tracked_set_bound, const std::vector<Rational>& budgets,
    std::uint64_t enum_budget) {
    EmbedResult res;
    const long n = h.total();
    if (x < 4 * n || static_cast<long>(a1.count()) < x || static_cast<long>(a2.count()) < x) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "need |A_1|, |A_2| >= x >= 4n";
        return res;
    }
    if (a1.universe() != static_cast<std::size_t>(host.left_size()) ||
        a2.universe() != static_cast<std::size_t>(host.right_size()))
        throw precondition_error("ledger greedy: side universes do not match the host");

    // Side 1 ledger audits subsets of A_1 against common neighbors in A_2,
    // and symmetrically for side 2.
    auto make_bad = [&host, x](Bitset opposite, bool left_side) {
        return [&host, x, opposite, left_side](const std::vector<int>& s) {
            Bitset sel(left_side ? static_cast<std::size_t>(host.left_size())
                                 : static_cast<std::size_t>(host.right_size()));
            for (int v : s) sel.set(static_cast<std::size_t>(v));
            Bitset common = left_side ? host.common_neighbors_of_left(sel)
                                      : host.common_neighbors_of_right(sel);
            common &= opposite;
            return static_cast<long>(common.count()) < x;
        };
    };
    GoodnessLedger ledger1(a1, target_size, budgets, make_bad(a2, true), enum_budget);
    GoodnessLedger ledger2(a2, target_size, budgets, make_bad(a1, false), enum_budget);

    if (!ledger1.is_good({}) || !ledger2.is_good({})) {
        res.status = EmbedStatus::HypothesisFailure;
        res.hypothesis_ok = false;
        res.failure_level = ledger1.is_good({}) ? 2 : 1;
        res.diagnostic = "bad target-size set count reaches its budget on side " +
                         std::to_string(res.failure_level);
        return res;
    }

    const Graph pat = h.to_graph();
    if (order.size() != static_cast<std::size_t>(n))
        throw precondition_error("ledger greedy: ordering length mismatch");
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<int> f(static_cast<std::size_t>(n), -1);
    Bitset occupied1(a1.universe()), occupied2(a2.universe());

    for (std::size_t step = 0; step < order.size(); ++step) {
        const int vh = order[step];
        const int side = side_of(h, vh);
        GoodnessLedger& own = side == 1 ? ledger1 : ledger2;
        const Bitset& own_set = side == 1 ? a1 : a2;
        Bitset& own_occupied = side == 1 ? occupied1 : occupied2;

        // Candidates: common neighbors of the already-embedded back set.
        Bitset back(side == 1 ? static_cast<std::size_t>(host.right_size())
                              : static_cast<std::size_t>(host.left_size()));
        pat.row(vh).for_each([&](int u) {
            if (pos[static_cast<std::size_t>(u)] < static_cast<int>(step))
                back.set(static_cast<std::size_t>(f[static_cast<std::size_t>(u)]));
        });
        Bitset cand = side == 1 ? host.common_neighbors_of_right(back)
                                : host.common_neighbors_of_left(back);
        cand &= own_set;
        cand.and_not(own_occupied);

        // Every forward neighbor's tracked back-set must stay good when
        // extended by the new image.
        std::vector<std::vector<int>> tracked;
        pat.row(vh).for_each([&](int u) {
            if (pos[static_cast<std::size_t>(u)] > static_cast<int>(step)) {
                std::vector<int> s;
                pat.row(u).for_each([&](int w) {
                    if (pos[static_cast<std::size_t>(w)] < static_cast<int>(step))
                        s.push_back(f[static_cast<std::size_t>(w)]);
                });
                std::sort(s.begin(), s.end());
                tracked.push_back(std::move(s));
            }
        });
        std::sort(tracked.begin(), tracked.end());
        tracked.erase(std::unique(tracked.begin(), tracked.end()), tracked.end());
        if (static_cast<long>(tracked.size()) > tracked_set_bound)
            throw precondition_error("ledger greedy: tracked-set bound exceeded");

        Bitset excluded(own_set.universe());
        for (const auto& s : tracked) {
            if (static_cast<long>(s.size()) >= target_size) continue;
            if (!own.is_good(s))
                throw invalid_embedding_error("ledger greedy: tracked set lost goodness");
            excluded |= own.bad_vertices(s);
        }
        if (2 * Int(excluded.count_and(own_set)) > Int(x))
            throw invalid_embedding_error("ledger greedy: exclusion budget x/2 exceeded");
        cand.and_not(excluded);
        if (cand.none()) {
            res.status = EmbedStatus::EmbeddingFailure;
            res.diagnostic = "no admissible vertex at step " + std::to_string(step);
            return res;
        }
        f[static_cast<std::size_t>(vh)] = cand.first();
        own_occupied.set(static_cast<std::size_t>(cand.first()));
    }

    // Part-local images -> the host's global numbering, then validate.
    std::vector<int> global_map(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        global_map[static_cast<std::size_t>(v)] =
            side_of(h, v) == 1 ? f[static_cast<std::size_t>(v)]
                               : host.left_size() + f[static_cast<std::size_t>(v)];
    Embedding emb{global_map, EmbedMode::PartRespecting};
    if (!validate_embedding_parts(h, host, emb))
        throw invalid_embedding_error("ledger greedy: produced map is invalid");
    res.status = EmbedStatus::Ok;
    res.embedding = std::move(emb);
    return res;
}

EmbedResult embed_bidegenerate_core(const BipartiteGraph& h, const BipartiteGraph& host,
                                    const Bitset& a1, const Bitset& a2, long x,
                                    long target_size, long tracked_set_bound,
                                    const std::vector<Rational>& budgets,
                                    std::uint64_t enum_budget) {
    return embed_bidegenerate_core_ordered(h, degeneracy_order(h.to_graph()).order, host,
                                           a1, a2, x, target_size, tracked_set_bound,
                                           budgets, enum_budget);
}

namespace {

struct PreparedHost {
    BipartiteGraph bip;  // left = V1, right = V2, equal parts
    std::vector<int> left_ids, right_ids;
    long n_part = 0;
};

PreparedHost split_host(const Graph& g, std::uint64_t seed) {
    CutPartition cut = balanced_max_cut_partition(g, seed);
    PreparedHost ph;
    ph.bip = bipartite_from_partition(g, cut.v1, &ph.left_ids, &ph.right_ids);
    ph.n_part = std::min(ph.bip.left_size(), ph.bip.right_size());
    if (ph.bip.left_size() != ph.bip.right_size()) {
        BipartiteGraph trimmed(static_cast<int>(ph.n_part), static_cast<int>(ph.n_part));
        for (int l = 0; l < ph.n_part; ++l)
            ph.bip.left_row(l).for_each([&](int r) {
                if (r < ph.n_part) trimmed.add_edge(l, r);
            });
        ph.bip = std::move(trimmed);
        ph.left_ids.resize(static_cast<std::size_t>(ph.n_part));
        ph.right_ids.resize(static_cast<std::size_t>(ph.n_part));
    }
    return ph;
}

// Shared pipeline of the degenerate and arrangeable embedders; they differ
// only in (subset size, tracked-set bound, degree-like constant, ordering).
// The sampled set A' lives in V1, so T is drawn from V2.  The operative
// hypotheses (the Q and Z bad-set counts against (2Δ)^{-d} C(x,d)) are
// verified exactly per trial; the intermediate u-set count of the proof is
// not materialized, since it is enumeration-infeasible at any useful N.
EmbedResult run_pipeline(const BipartiteGraph& h, const std::vector<int>& order,
                         const Graph& g, const Rational& epsilon, const Rational& delta,
                         long dsize, long tracked_bound, long degree_like,
                         std::uint64_t seed) {
    EmbedResult res;
    if (epsilon <= 0 || epsilon > 1)
        throw precondition_error("degenerate pipeline: epsilon outside (0,1]");
    if (delta <= 0 || delta > 1)
        throw precondition_error("degenerate pipeline: delta outside (0,1]");
    const long n = h.total();
    if (n == 0) {
        res.status = EmbedStatus::Ok;
        res.embedding = Embedding{{}, EmbedMode::Subgraph};
        return res;
    }
    if (Rational(dsize, n) > delta) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "delta below d/n";
        return res;
    }

    PreparedHost ph = split_host(g, seed);
    const long big_n = ph.n_part;
    if (Rational(ph.bip.m()) < epsilon * Int(big_n) * Int(big_n)) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "cross-edge count below eps N^2";
        return res;
    }

    const long t =
        static_cast<long>(ceil_int((1 + rational_pow(delta, -1)) * dsize));
    // x = 2^{-9} eps^{(1+t)(1+delta)} Delta^{-delta} N; the exponents are
    // rational, so this one quantity is evaluated in floating point.
    const double eps_d = static_cast<double>(numerator(epsilon)) /
                         static_cast<double>(denominator(epsilon));
    const double delta_d = static_cast<double>(numerator(delta)) /
                           static_cast<double>(denominator(delta));
    const double xd = std::pow(2.0, -9.0) *
                      std::pow(eps_d, (1.0 + static_cast<double>(t)) * (1.0 + delta_d)) *
                      std::pow(static_cast<double>(degree_like), -delta_d) *
                      static_cast<double>(big_n);
    const long x = static_cast<long>(std::floor(xd));
    if (x < 4 * n) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "threshold x below 4n";
        return res;
    }

    const std::vector<Rational> budgets = degenerate_budgets(x, dsize, degree_like);
    const Rational& side_budget = budgets[0];  // (2Δ)^{-d} C(x,d)
    const Rational size_floor = rational_pow(epsilon, t) * big_n;  // 2|A'| >= eps^t N

    Rng base(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng trial = base.fork(static_cast<std::uint64_t>(attempt));
        // Dependent random choice with a = 1: T from V2, A' = N(T) in V1.
        Bitset t_support(static_cast<std::size_t>(big_n));
        for (long i = 0; i < t; ++i)
            t_support.set(static_cast<std::size_t>(trial.below(static_cast<std::uint64_t>(big_n))));
        Bitset a_prime = ph.bip.common_neighbors_of_right(t_support);
        if (2 * Rational(a_prime.count()) < size_floor) continue;
        if (a_prime.count() < static_cast<std::size_t>(t)) continue;

        std::vector<int> s_vec =
            trial.sample_without_replacement(a_prime, static_cast<std::size_t>(t));
        Bitset s(static_cast<std::size_t>(big_n));
        for (int v : s_vec) s.set(static_cast<std::size_t>(v));
        Bitset a2 = ph.bip.common_neighbors_of_left(s);  // N(S) in V2
        Bitset a1 = a_prime;
        a1.and_not(s);
        if (static_cast<long>(a1.count()) < x || static_cast<long>(a2.count()) < x)
            continue;

        EmbedResult inner = embed_bidegenerate_core_ordered(
            h, order, ph.bip, a1, a2, x, dsize, tracked_bound, budgets);
        if (inner.status == EmbedStatus::HypothesisFailure) {
            // Unlucky S: the Markov argument only promises success for half
            // of the draws, so retry.
            continue;
        }
        if (inner.status != EmbedStatus::Ok) return inner;

        // Translate part-local global numbering back to host vertex ids.
        std::vector<int> map(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            int img = inner.embedding->map[static_cast<std::size_t>(v)];
            map[static_cast<std::size_t>(v)] =
                img < static_cast<int>(big_n)
                    ? ph.left_ids[static_cast<std::size_t>(img)]
                    : ph.right_ids[static_cast<std::size_t>(img - big_n)];
        }
        Embedding emb{map, EmbedMode::Subgraph};
        if (!validate_embedding(h.to_graph(), g, emb))
            throw invalid_embedding_error("degenerate pipeline: produced map is invalid");
        res.status = EmbedStatus::Ok;
        res.embedding = std::move(emb);
        return res;
    }

    res.status = EmbedStatus::HypothesisFailure;
    res.hypothesis_ok = false;
    res.diagnostic = "retry budget exhausted sampling T and S (Q/Z budget " +
                     rational_str(side_budget) + ")";
    return res;
}

}  // namespace

EmbedResult embed_degenerate(const BipartiteGraph& h, const Graph& g,
                             const Rational& epsilon, const Rational& delta,
                             std::uint64_t seed) {
    const Graph pat = h.to_graph();
    const DegeneracyResult deg = degeneracy_order(pat);
    const long d = std::max(deg.d, 1);
    const long max_deg = std::max(pat.max_degree(), 1);
    return run_pipeline(h, deg.order, g, epsilon, delta, d, max_deg, max_deg, seed);
}

EmbedResult embed_arrangeable(const BipartiteGraph& h, const std::vector<int>& ordering,
                              long p, const Graph& g, const Rational& epsilon,
                              std::uint64_t seed) {
    if (p < 1 || p > 60) throw precondition_error("embed_arrangeable: p out of range");
    if (!verify_arrangeable(h.to_graph(), ordering, static_cast<int>(p)))
        throw precondition_error("embed_arrangeable: ordering is not p-arrangeable");
    const long tracked = 1L << (p - 1);
    return run_pipeline(h, ordering, g, epsilon, Rational(1), p, tracked, tracked, seed);
}

}  // namespace egt
