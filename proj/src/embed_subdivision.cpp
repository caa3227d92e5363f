#include "egt/embedders.hpp"
#include "egt/errors.hpp"
#include "egt/generators.hpp"
#include "egt/maxcut.hpp"
#include "egt/rng.hpp"

#include <algorithm>

namespace egt {

namespace {

// Complement degrees of aux restricted to `within`: |within| - 1 - deg_aux.
long max_complement_degree(const Graph& aux, const Bitset& within) {
    const long sz = static_cast<long>(within.count());
    long best = -1;
    within.for_each([&](int v) {
        long cd = sz - 1 - static_cast<long>(aux.row(v).count_and(within));
        best = std::max(best, cd);
    });
    return best;
}

}  // namespace

EmbedResult embed_subdivision(const Graph& h, const Graph& g, const Rational& epsilon,
                              std::uint64_t seed, bool allow_undersized_host) {
    EmbedResult res;
    if (epsilon <= 0 || epsilon > 1)
        throw precondition_error("embed_subdivision: epsilon outside (0,1]");
    const long n_edges = h.m();
    if (n_edges == 0) throw precondition_error("embed_subdivision: pattern has no edges");
    if (g.n() % 2 != 0) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "host order must be even (2N vertices)";
        return res;
    }
    const long big_n = g.n() / 2;

    const bool sized_ok =
        Rational(g.m()) >= 2 * epsilon * Int(big_n) * Int(big_n) &&
        Rational(big_n) >= Rational(128 * n_edges) * rational_pow(epsilon, -3);
    if (!sized_ok) {
        if (!allow_undersized_host) {
            res.status = EmbedStatus::SizeError;
            res.diagnostic = "need e(G) >= 2 eps N^2 and N >= 128 eps^{-3} n";
            return res;
        }
        res.best_effort = true;
        res.hypothesis_ok = false;
    }

    // The subdivision pattern and its contact graph H' on U1.  For a
    // 1-subdivision, two branch vertices share a neighbor exactly when they
    // are adjacent in h, so H' = h; its edge count is recorded anyway.
    const BipartiteGraph pattern = one_subdivision(h);
    const Graph pattern_graph = pattern.to_graph();
    const long nv = pattern.total();  // vertices of the subdivision
    const Graph& h_prime = h;
    if (h_prime.m() > n_edges)
        throw invalid_embedding_error("embed_subdivision: contact graph exceeds n edges");

    CutPartition cut = balanced_max_cut_partition(g, seed);
    std::vector<int> left_ids, right_ids;
    BipartiteGraph bip = bipartite_from_partition(g, cut.v1, &left_ids, &right_ids);

    // Prune V1 down to the vertices of degree at least eps N / 2.
    Bitset v1_kept(static_cast<std::size_t>(bip.left_size()));
    for (int l = 0; l < bip.left_size(); ++l)
        if (Rational(bip.left_degree(l)) >= epsilon * big_n / 2)
            v1_kept.set(static_cast<std::size_t>(l));
    if (v1_kept.none()) {
        res.status = EmbedStatus::EmbeddingFailure;
        res.diagnostic = "min-degree pruning removed all of V1";
        return res;
    }

    // Auxiliary graph on the kept V1 vertices: adjacent iff at least nv
    // common neighbors in V2.
    const std::vector<int> kept = v1_kept.to_vector();
    const int k = static_cast<int>(kept.size());
    Graph aux(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (bip.left_row(kept[static_cast<std::size_t>(i)])
                    .count_and_at_least(bip.left_row(kept[static_cast<std::size_t>(j)]),
                                        static_cast<std::size_t>(nv)))
                aux.add_edge(i, j);

    // Nested chain over aux vertices with complement-degree control.  The
    // deepest level needed is the least j with (eps/8)^j <= 1/(4 nv).
    long depth = 0;
    {
        Rational c = 1;
        while (c * (4 * nv) > 1) {
            c *= epsilon / 8;
            ++depth;
            if (depth > 512) break;
        }
    }
    std::vector<Rational> c_of(static_cast<std::size_t>(depth) + 1);
    c_of[0] = 1;
    for (long i = 1; i <= depth; ++i) c_of[static_cast<std::size_t>(i)] =
        c_of[static_cast<std::size_t>(i - 1)] * epsilon / 8;

    std::vector<Bitset> chain;  // A_0 .. A_depth over aux vertices
    chain.push_back(Bitset(static_cast<std::size_t>(k), true));
    Rng rng = Rng(seed).fork(1);
    for (long i = 1; i <= depth; ++i) {
        const Bitset& prev = chain.back();
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            // Intersect with the neighborhood of a random V2 vertex.
            const int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(bip.right_size())));
            Bitset a(static_cast<std::size_t>(k));
            prev.for_each([&](int idx) {
                if (bip.right_row(w).test(static_cast<std::size_t>(kept[static_cast<std::size_t>(idx)])))
                    a.set(static_cast<std::size_t>(idx));
            });
            if (4 * Rational(a.count()) < epsilon * Rational(prev.count())) continue;

            // Delete high-complement-degree vertices against the fixed
            // threshold eps c_{i-1} |A| / 16.
            const Rational threshold =
                epsilon * c_of[static_cast<std::size_t>(i - 1)] * Rational(a.count()) / 16;
            Bitset cur = a;
            while (true) {
                int worst = -1;
                long worst_cd = -1;
                const long sz = static_cast<long>(cur.count());
                cur.for_each([&](int v) {
                    long cd = sz - 1 - static_cast<long>(aux.row(v).count_and(cur));
                    if (cd > worst_cd) {
                        worst_cd = cd;
                        worst = v;
                    }
                });
                if (worst < 0 || Rational(worst_cd) <= threshold) break;
                cur.reset(static_cast<std::size_t>(worst));
            }
            if (2 * cur.count() < a.count()) continue;
            if (Rational(max_complement_degree(aux, cur)) >
                c_of[static_cast<std::size_t>(i)] * Rational(cur.count()))
                continue;
            if (8 * Rational(cur.count()) < epsilon * Rational(prev.count())) continue;
            chain.push_back(cur);
            placed = true;
        }
        if (!placed) {
            res.status = EmbedStatus::EmbeddingFailure;
            res.failure_level = static_cast<int>(i);
            res.diagnostic = "chain construction retries exhausted at level " +
                             std::to_string(i);
            return res;
        }
    }

    // Embed H' into aux: vertices in decreasing degree order, v_i into the
    // shallowest level with c_j <= i / (4 nv).
    std::vector<int> order(static_cast<std::size_t>(h.n()));
    for (int v = 0; v < h.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return h_prime.degree(a) > h_prime.degree(b);
    });

    std::vector<int> f1(static_cast<std::size_t>(h.n()), -1);  // branch -> aux vertex
    Bitset occupied_aux(static_cast<std::size_t>(k));
    for (std::size_t step = 0; step < order.size(); ++step) {
        const int vh = order[step];
        const long rank = static_cast<long>(step) + 1;
        long j = 0;
        while (j < depth && c_of[static_cast<std::size_t>(j)] * (4 * nv) > rank) ++j;
        Bitset cand = chain[static_cast<std::size_t>(j)];
        cand.and_not(occupied_aux);
        bool ok = true;
        h_prime.row(vh).for_each([&](int u) {
            if (!ok) return;
            const int img = f1[static_cast<std::size_t>(u)];
            if (img >= 0) {
                cand &= aux.row(img);
                if (cand.none()) ok = false;
            }
        });
        if (!ok || cand.none()) {
            res.status = EmbedStatus::EmbeddingFailure;
            res.diagnostic = "no admissible branch vertex at step " + std::to_string(step);
            return res;
        }
        f1[static_cast<std::size_t>(vh)] = cand.first();
        occupied_aux.set(static_cast<std::size_t>(cand.first()));
    }

    // Extend through the subdivision vertices: each pattern edge gets an
    // unoccupied common neighbor in V2 of its two branch images.
    const auto h_edges = h.edges();
    std::vector<int> f2(h_edges.size(), -1);  // edge index -> V2-local vertex
    Bitset occupied_right(static_cast<std::size_t>(bip.right_size()));
    for (std::size_t ei = 0; ei < h_edges.size(); ++ei) {
        Bitset sel(static_cast<std::size_t>(bip.left_size()));
        sel.set(static_cast<std::size_t>(kept[static_cast<std::size_t>(
            f1[static_cast<std::size_t>(h_edges[ei].first)])]));
        sel.set(static_cast<std::size_t>(kept[static_cast<std::size_t>(
            f1[static_cast<std::size_t>(h_edges[ei].second)])]));
        Bitset cand = bip.common_neighbors_of_left(sel);
        cand.and_not(occupied_right);
        if (cand.none()) {
            res.status = EmbedStatus::EmbeddingFailure;
            res.diagnostic = "no free subdivision vertex for edge " + std::to_string(ei);
            return res;
        }
        f2[ei] = cand.first();
        occupied_right.set(static_cast<std::size_t>(cand.first()));
    }

    // Assemble the subdivision's global map: branch vertices first, then
    // one vertex per edge in lexicographic edge order.
    std::vector<int> map(static_cast<std::size_t>(nv));
    for (int v = 0; v < h.n(); ++v)
        map[static_cast<std::size_t>(v)] =
            left_ids[static_cast<std::size_t>(kept[static_cast<std::size_t>(
                f1[static_cast<std::size_t>(v)])])];
    for (std::size_t ei = 0; ei < h_edges.size(); ++ei)
        map[static_cast<std::size_t>(h.n()) + ei] =
            right_ids[static_cast<std::size_t>(f2[ei])];
    Embedding emb{map, EmbedMode::Subgraph};
    if (!validate_embedding(pattern_graph, g, emb))
        throw invalid_embedding_error("embed_subdivision: produced map is invalid");
    res.status = EmbedStatus::Ok;
    res.embedding = std::move(emb);
    return res;
}

}  // namespace egt
