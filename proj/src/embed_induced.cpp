#include "egt/embedders.hpp"
#include "egt/errors.hpp"

#include <algorithm>

namespace egt {

EmbedResult embed_induced(const Graph& h, const Graph& g, const Graph& f_graph,
                          const NestedFamily& nested, long m,
                          std::uint64_t enum_budget) {
    EmbedResult res;
    const long n = h.n();
    if (n < 1) throw precondition_error("embed_induced: empty pattern");
    if (g.n() != f_graph.n())
        throw precondition_error("embed_induced: host graphs differ in order");
    for (int v = 0; v < g.n(); ++v)
        if (g.row(v).intersects(f_graph.row(v)))
            throw precondition_error("embed_induced: host graphs share an edge");
    nested.validate();
    if (static_cast<long>(nested.levels.size()) != n)
        throw precondition_error("embed_induced: chain must have one level per pattern vertex");
    for (const Bitset& lvl : nested.levels)
        if (lvl.universe() != static_cast<std::size_t>(g.n()))
            throw precondition_error("embed_induced: level universe mismatch");
    if (m < 2 * n || static_cast<long>(nested.levels.back().count()) < m) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "need |A_n| >= m >= 2n";
        return res;
    }

    try {
        // One pair ledger per chain link: disjoint n-set pairs inside A_{i+1}
        // audited against simultaneous neighborhoods meeting A_i.
        std::vector<PairGoodnessLedger> ledgers;  // index i-1 holds link i
        ledgers.reserve(static_cast<std::size_t>(n - 1));
        for (long i = 1; i < n; ++i) {
            const Bitset& lower = nested.levels[static_cast<std::size_t>(i - 1)];
            ledgers.emplace_back(
                nested.levels[static_cast<std::size_t>(i)], n, m,
                [&g, &f_graph, lower, m](const std::vector<int>& s1,
                                         const std::vector<int>& s2) {
                    Bitset sel1(static_cast<std::size_t>(g.n()));
                    for (int v : s1) sel1.set(static_cast<std::size_t>(v));
                    Bitset sel2(static_cast<std::size_t>(g.n()));
                    for (int v : s2) sel2.set(static_cast<std::size_t>(v));
                    Bitset common = common_neighborhood(g, sel1);
                    common &= common_neighborhood(f_graph, sel2);
                    common &= lower;
                    return static_cast<long>(common.count()) < m;
                },
                enum_budget);
        }
        for (long i = 1; i < n; ++i) {
            if (!ledgers[static_cast<std::size_t>(i - 1)].is_good({}, {})) {
                res.status = EmbedStatus::HypothesisFailure;
                res.hypothesis_ok = false;
                res.failure_level = static_cast<int>(i);
                res.diagnostic =
                    "bad disjoint n-set pair count reaches (2n)^{-2n} C(m,n)^2 at link " +
                    std::to_string(i);
                return res;
            }
        }

        // Embed vertex v_h (0-based h) into A_{n-h}, i.e. levels[n-1-h].
        std::vector<int> fmap(static_cast<std::size_t>(n), -1);
        Bitset occupied(static_cast<std::size_t>(g.n()));
        for (long step = 0; step < n; ++step) {
            const int vh = static_cast<int>(step);
            const Bitset& level = nested.levels[static_cast<std::size_t>(n - 1 - step)];

            Bitset back_adj(static_cast<std::size_t>(g.n()));
            Bitset back_non(static_cast<std::size_t>(g.n()));
            for (long k = 0; k < step; ++k) {
                const int img = fmap[static_cast<std::size_t>(k)];
                if (h.has_edge(static_cast<int>(k), vh))
                    back_adj.set(static_cast<std::size_t>(img));
                else
                    back_non.set(static_cast<std::size_t>(img));
            }
            Bitset cand = common_neighborhood(g, back_adj);
            cand &= common_neighborhood(f_graph, back_non);
            cand &= level;
            cand.and_not(occupied);

            // Keep every later vertex's tracked pair good with respect to
            // its own link.
            Bitset excluded(static_cast<std::size_t>(g.n()));
            for (long j = step + 1; j < n; ++j) {
                std::vector<int> u1, u2;
                for (long k = 0; k < step; ++k) {
                    const int img = fmap[static_cast<std::size_t>(k)];
                    if (h.has_edge(static_cast<int>(k), static_cast<int>(j)))
                        u1.push_back(img);
                    else
                        u2.push_back(img);
                }
                std::sort(u1.begin(), u1.end());
                std::sort(u2.begin(), u2.end());
                // Link n-j for 0-based j: v_j's images land in the level
                // one below v_h's.
                PairGoodnessLedger& lj = ledgers[static_cast<std::size_t>(n - 1 - j)];
                if (!lj.is_good(u1, u2))
                    throw invalid_embedding_error(
                        "embed_induced: tracked pair lost goodness");
                const int side = h.has_edge(vh, static_cast<int>(j)) ? 1 : 2;
                excluded |= lj.bad_vertices(u1, u2, side);
            }
            if (2 * Int(excluded.count_and(level)) > Int(m))
                throw invalid_embedding_error(
                    "embed_induced: exclusion budget m/2 exceeded");
            cand.and_not(excluded);
            if (cand.none()) {
                res.status = EmbedStatus::EmbeddingFailure;
                res.diagnostic = "no admissible vertex at step " + std::to_string(step);
                return res;
            }
            fmap[static_cast<std::size_t>(step)] = cand.first();
            occupied.set(static_cast<std::size_t>(cand.first()));
        }

        Embedding emb{fmap, EmbedMode::InducedPair};
        if (!validate_embedding_induced(h, g, f_graph, emb))
            throw invalid_embedding_error("embed_induced: produced map is invalid");
        for (long step = 0; step < n; ++step)
            if (!nested.levels[static_cast<std::size_t>(n - 1 - step)].test(
                    static_cast<std::size_t>(fmap[static_cast<std::size_t>(step)])))
                throw invalid_embedding_error("embed_induced: image escapes its level");
        res.status = EmbedStatus::Ok;
        res.embedding = std::move(emb);
        return res;
    } catch (const budget_error& e) {
        res.status = EmbedStatus::EmbeddingFailure;
        res.diagnostic = std::string("enumeration budget exhausted: ") + e.what();
        return res;
    }
}

}  // namespace egt
