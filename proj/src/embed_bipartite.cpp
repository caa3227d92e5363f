#include "egt/drc.hpp"
#include "egt/embedders.hpp"
#include "egt/errors.hpp"
#include "egt/maxcut.hpp"
#include "egt/rng.hpp"

#include <algorithm>

namespace egt {

namespace {

// Keeps the first n_keep vertices of each part (used to equalize parts when
// the host has an odd vertex count).
BipartiteGraph truncated(const BipartiteGraph& b, int n_keep) {
    BipartiteGraph out(n_keep, n_keep);
    for (int l = 0; l < n_keep; ++l)
        b.left_row(l).for_each([&](int r) {
            if (r < n_keep) out.add_edge(l, r);
        });
    return out;
}

}  // namespace

EmbedResult embed_bipartite_dense(const BipartiteGraph& h, const Graph& g,
                                  const Rational& epsilon, std::uint64_t seed) {
    EmbedResult res;
    if (epsilon <= 0 || epsilon > 1) throw precondition_error("embed_bipartite_dense: epsilon outside (0,1]");
    const long n = h.total();
    const long d = std::max<long>(h.max_degree(), 2);
    if (n == 0) {
        res.status = EmbedStatus::Ok;
        res.embedding = Embedding{{}, EmbedMode::Subgraph};
        return res;
    }

    // Orient the pattern so the hypergraph side U2 is the larger part.
    const bool swapped = h.left_size() > h.right_size();
    const int u1_size = swapped ? h.right_size() : h.left_size();
    const int u2_size = swapped ? h.left_size() : h.right_size();
    auto u1_neighbors = [&](int u) {  // neighbors of U1 vertex u, as U2 indices
        return swapped ? h.right_row(u) : h.left_row(u);
    };

    CutPartition cut = balanced_max_cut_partition(g, seed);
    std::vector<int> left_ids, right_ids;
    BipartiteGraph bip = bipartite_from_partition(g, cut.v1, &left_ids, &right_ids);
    const int big_n = std::min(bip.left_size(), bip.right_size());
    if (bip.left_size() != bip.right_size()) {
        bip = truncated(bip, big_n);
        left_ids.resize(static_cast<std::size_t>(big_n));
        right_ids.resize(static_cast<std::size_t>(big_n));
    }

    if (Rational(big_n) < Rational(16 * d * n) * rational_pow(epsilon, -d)) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "N < 16 d eps^{-d} n after the balanced partition";
        return res;
    }
    if (Rational(bip.m()) < epsilon * Int(big_n) * Int(big_n)) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "cross-edge count below eps N^2";
        return res;
    }
    const long x = static_cast<long>(
        floor_int(rational_pow(epsilon, d) * big_n / (8 * d)));
    if (x < 2 * n) {
        res.status = EmbedStatus::SizeError;
        res.diagnostic = "common-neighborhood threshold x below 2n";
        return res;
    }

    DrcParams params;
    params.a = d;
    params.t = d;
    params.d = d;
    params.x = x;
    params.epsilon = epsilon;
    DrcOutcome witness = drc_find_witness(bip, params, 64, Rng(seed).fork(1).seed());
    const Bitset& a_set = witness.A;
    const long a_size = static_cast<long>(a_set.count());

    // The derived density hypothesis for the greedy: bad d-sets of A below
    // (4d)^{-d} C(|A|, d).
    if (Rational(witness.bad_count) >=
        rational_pow(Rational(1, 4 * d), d) * binomial(a_size, d)) {
        res.status = EmbedStatus::HypothesisFailure;
        res.hypothesis_ok = false;
        res.diagnostic = "bad d-set count in A reaches (4d)^{-d} C(|A|,d)";
        return res;
    }

    // Degree-pattern hypergraph on U2: one edge per U1-neighborhood.
    std::vector<std::vector<int>> hyp_edges;
    for (int u = 0; u < u1_size; ++u) {
        std::vector<int> e = u1_neighbors(u).to_vector();
        if (!e.empty()) hyp_edges.push_back(std::move(e));
    }
    std::sort(hyp_edges.begin(), hyp_edges.end());
    hyp_edges.erase(std::unique(hyp_edges.begin(), hyp_edges.end()), hyp_edges.end());
    Hypergraph hyp(u2_size, hyp_edges);

    auto nice = [&bip, x](const std::vector<int>& s) {
        Bitset rs(static_cast<std::size_t>(bip.right_size()));
        for (int v : s) rs.set(static_cast<std::size_t>(v));
        return bip.common_neighbors_of_right(rs).count() >= static_cast<std::size_t>(x);
    };
    EmbedResult inner = embed_hypergraph_greedy(hyp, nice, a_set, seed, false,
                                                kDefaultEnumBudget, d, d);
    if (inner.status != EmbedStatus::Ok) {
        res.status = inner.status;
        res.hypothesis_ok = inner.hypothesis_ok;
        res.diagnostic = "hypergraph stage: " + inner.diagnostic;
        return res;
    }
    const std::vector<int>& f2 = inner.embedding->map;  // U2 index -> right-local

    // Extend U1 through the >= x common neighbors of each embedded
    // neighborhood image.
    Bitset occupied_left(static_cast<std::size_t>(big_n));
    std::vector<int> f1(static_cast<std::size_t>(u1_size), -1);
    for (int u = 0; u < u1_size; ++u) {
        Bitset rs(static_cast<std::size_t>(big_n));
        u1_neighbors(u).for_each(
            [&](int w) { rs.set(static_cast<std::size_t>(f2[static_cast<std::size_t>(w)])); });
        Bitset cand = bip.common_neighbors_of_right(rs);
        cand.and_not(occupied_left);
        if (cand.none()) {
            res.status = EmbedStatus::EmbeddingFailure;
            res.diagnostic = "no free common neighbor while extending the small part";
            return res;
        }
        f1[static_cast<std::size_t>(u)] = cand.first();
        occupied_left.set(static_cast<std::size_t>(cand.first()));
    }

    // Reassemble in the pattern's own global numbering (left part first).
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < u1_size; ++u) {
        int pattern_global = swapped ? h.left_size() + u : u;
        map[static_cast<std::size_t>(pattern_global)] =
            left_ids[static_cast<std::size_t>(f1[static_cast<std::size_t>(u)])];
    }
    for (int w = 0; w < u2_size; ++w) {
        int pattern_global = swapped ? w : h.left_size() + w;
        map[static_cast<std::size_t>(pattern_global)] =
            right_ids[static_cast<std::size_t>(f2[static_cast<std::size_t>(w)])];
    }
    Embedding emb{map, EmbedMode::Subgraph};
    if (!validate_embedding(h.to_graph(), g, emb))
        throw invalid_embedding_error("embed_bipartite_dense: produced map is invalid");
    res.status = EmbedStatus::Ok;
    res.embedding = std::move(emb);
    return res;
}

}  // namespace egt
