#include "egt/embedders.hpp"
#include "egt/errors.hpp"

#include <algorithm>

namespace egt {

EmbedResult embed_chromatic(const Graph& h, const std::vector<int>& q_partition,
                            const Graph& g, const NestedFamily& nested, long x, long d,
                            std::uint64_t enum_budget) {
    EmbedResult res;
    const long n = h.n();
    if (q_partition.size() != static_cast<std::size_t>(n))
        throw precondition_error("embed_chromatic: partition length mismatch");
    nested.validate();
    const long q = static_cast<long>(nested.levels.size());
    if (q < 1) throw precondition_error("embed_chromatic: empty nested family");
    for (int c : q_partition)
        if (c < 0 || c >= q)
            throw precondition_error("embed_chromatic: part index out of range");
    for (auto [u, v] : h.edges())
        if (q_partition[static_cast<std::size_t>(u)] == q_partition[static_cast<std::size_t>(v)])
            throw precondition_error("embed_chromatic: partition classes are not independent");
    if (h.max_degree() > d)
        throw precondition_error("embed_chromatic: pattern degree exceeds d");
    for (const Bitset& lvl : nested.levels)
        if (lvl.universe() != static_cast<std::size_t>(g.n()))
            throw precondition_error("embed_chromatic: level universe mismatch");
    if (x < 4 * n ||
        static_cast<long>(nested.levels.back().count()) < x) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "need |V_q| >= x >= 4n";
        return res;
    }

    // One ledger per chain link: subsets of V_{i+1} audited against common
    // neighbors inside V_i.
    std::vector<GoodnessLedger> ledgers;
    ledgers.reserve(static_cast<std::size_t>(q > 0 ? q - 1 : 0));
    const std::vector<Rational> budgets = chromatic_budgets(x, d);
    for (long i = 0; i + 1 < q; ++i) {
        const Bitset& upper = nested.levels[static_cast<std::size_t>(i)];
        ledgers.emplace_back(
            nested.levels[static_cast<std::size_t>(i + 1)], d, budgets,
            [&g, upper, x](const std::vector<int>& s) {
                Bitset sel(static_cast<std::size_t>(g.n()));
                for (int v : s) sel.set(static_cast<std::size_t>(v));
                Bitset common = common_neighborhood(g, sel);
                common &= upper;
                return static_cast<long>(common.count()) < x;
            },
            enum_budget);
    }
    for (long i = 0; i + 1 < q; ++i) {
        if (!ledgers[static_cast<std::size_t>(i)].is_good({})) {
            res.status = EmbedStatus::HypothesisFailure;
            res.hypothesis_ok = false;
            res.failure_level = static_cast<int>(i + 1);
            res.diagnostic = "bad d-set count reaches (2d)^{-d} C(x,d) at level " +
                             std::to_string(i + 1);
            return res;
        }
    }

    // Vertices of part W_k precede those of W_j for k > j.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return q_partition[static_cast<std::size_t>(a)] > q_partition[static_cast<std::size_t>(b)];
    });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<int> f(static_cast<std::size_t>(n), -1);
    Bitset occupied(static_cast<std::size_t>(g.n()));

    for (std::size_t step = 0; step < order.size(); ++step) {
        const int vh = order[step];
        const long lvl = q_partition[static_cast<std::size_t>(vh)];  // 0-based part

        Bitset back(static_cast<std::size_t>(g.n()));
        h.row(vh).for_each([&](int u) {
            if (pos[static_cast<std::size_t>(u)] < static_cast<int>(step))
                back.set(static_cast<std::size_t>(f[static_cast<std::size_t>(u)]));
        });
        Bitset cand = common_neighborhood(g, back);
        cand &= nested.levels[static_cast<std::size_t>(lvl)];
        cand.and_not(occupied);

        // Forward neighbors live in lower parts; extending their tracked
        // back-set image must keep it good with respect to that part's link.
        Bitset excluded(static_cast<std::size_t>(g.n()));
        bool tracked_ok = true;
        h.row(vh).for_each([&](int u) {
            if (!tracked_ok || pos[static_cast<std::size_t>(u)] <= static_cast<int>(step))
                return;
            const long j = q_partition[static_cast<std::size_t>(u)];
            std::vector<int> s;
            h.row(u).for_each([&](int w) {
                if (pos[static_cast<std::size_t>(w)] < static_cast<int>(step))
                    s.push_back(f[static_cast<std::size_t>(w)]);
            });
            std::sort(s.begin(), s.end());
            if (static_cast<long>(s.size()) >= d) return;
            GoodnessLedger& lj = ledgers[static_cast<std::size_t>(j)];
            if (!lj.is_good(s)) {
                tracked_ok = false;
                return;
            }
            excluded |= lj.bad_vertices(s);
        });
        if (!tracked_ok)
            throw invalid_embedding_error("embed_chromatic: tracked set lost goodness");
        if (2 * Int(excluded.count_and(nested.levels[static_cast<std::size_t>(lvl)])) >
            Int(x))
            throw invalid_embedding_error("embed_chromatic: exclusion budget x/2 exceeded");
        cand.and_not(excluded);
        if (cand.none()) {
            res.status = EmbedStatus::EmbeddingFailure;
            res.diagnostic = "no admissible vertex at step " + std::to_string(step);
            return res;
        }
        f[static_cast<std::size_t>(vh)] = cand.first();
        occupied.set(static_cast<std::size_t>(cand.first()));
    }

    Embedding emb{f, EmbedMode::Subgraph};
    if (!validate_embedding(h, g, emb))
        throw invalid_embedding_error("embed_chromatic: produced map is invalid");
    for (int v = 0; v < n; ++v)
        if (!nested.levels[static_cast<std::size_t>(q_partition[static_cast<std::size_t>(v)])]
                 .test(static_cast<std::size_t>(f[static_cast<std::size_t>(v)])))
            throw invalid_embedding_error("embed_chromatic: image escapes its level");
    res.status = EmbedStatus::Ok;
    res.embedding = std::move(emb);
    return res;
}

}  // namespace egt
