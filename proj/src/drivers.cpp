#include "egt/drivers.hpp"

#include "egt/drc.hpp"
#include "egt/errors.hpp"
#include "egt/maxcut.hpp"
#include "egt/oracles.hpp"
#include "egt/rng.hpp"

#include <algorithm>

namespace egt {

namespace {

// Color class with the most cross edges between two disjoint vertex sets;
// ties break toward the lowest color index.
int densest_color_between(const EdgeColoring& coloring, const std::vector<int>& h1,
                          const Bitset& h2) {
    int best = 0;
    long best_cnt = -1;
    for (int j = 0; j < coloring.k(); ++j) {
        long cnt = 0;
        const Graph& cls = coloring.classes[static_cast<std::size_t>(j)];
        for (int v : h1) cnt += static_cast<long>(cls.row(v).count_and(h2));
        if (cnt > best_cnt) {
            best_cnt = cnt;
            best = j;
        }
    }
    return best;
}

BipartiteGraph bipartite_between(const Graph& cls, const std::vector<int>& h1,
                                 const std::vector<int>& h2) {
    BipartiteGraph bip(static_cast<int>(h1.size()), static_cast<int>(h2.size()));
    for (std::size_t l = 0; l < h1.size(); ++l)
        for (std::size_t r = 0; r < h2.size(); ++r)
            if (cls.has_edge(h1[l], h2[r])) bip.add_edge(static_cast<int>(l),
                                                         static_cast<int>(r));
    return bip;
}

}  // namespace

ColoredEmbedResult mono_embed_2color(const Graph& h, const EdgeColoring& coloring,
                                     std::uint64_t seed, bool allow_undersized) {
    if (coloring.k() != 2)
        throw precondition_error("mono_embed_2color: exactly two colors required");
    const int big_n = coloring.host.n();
    if (coloring.host.m() != static_cast<long>(big_n) * (big_n - 1) / 2)
        throw precondition_error("mono_embed_2color: host must be complete");

    ColoredEmbedResult out;
    const long n = h.n();
    std::vector<int> parts;
    const int q = chromatic_number(h, &parts);
    const long d = std::max<long>(h.max_degree(), 2);

    if (q <= 1) {
        // Edgeless pattern: any n distinct vertices are a copy in color 0.
        if (n > big_n) {
            out.color = 0;
            out.result.status = EmbedStatus::SizeError;
            out.result.diagnostic = "pattern larger than the host";
            return out;
        }
        std::vector<int> map(static_cast<std::size_t>(n));
        for (long v = 0; v < n; ++v) map[static_cast<std::size_t>(v)] = static_cast<int>(v);
        out.color = 0;
        out.result.status = EmbedStatus::Ok;
        out.result.embedding = Embedding{map, EmbedMode::Subgraph};
        return out;
    }

    const long links = 2 * q - 3;
    const long shift = (2 * d + 2) * links;
    long x = shift < 62 ? (static_cast<long>(big_n) >> shift) : 0;
    if (x < 4 * n) {
        if (!allow_undersized) {
            out.result.status = EmbedStatus::SizeError;
            out.result.diagnostic = "need N >= 2^{(2d+2)(2q-3)+2} n";
            return out;
        }
        out.result.best_effort = true;
        out.result.hypothesis_ok = false;
        x = 4 * n;
    }
    const Rational budget0 = rational_pow(Rational(1, 2 * d), d) * binomial(x, d);

    std::vector<Bitset> chain;  // A_1 .. A_{2q-2}, global vertex bitsets
    chain.push_back(coloring.host.vertices());
    std::vector<int> link_colors;
    Rng base(seed);
    out.chain_sizes.push_back(static_cast<long>(chain.back().count()));

    for (long i = 0; i < links; ++i) {
        Rng rng = base.fork(static_cast<std::uint64_t>(i) + 1);
        std::vector<int> members = chain.back().to_vector();
        rng.shuffle(members);
        if (members.size() % 2 != 0) members.pop_back();
        const long trimmed = static_cast<long>(members.size());
        const std::size_t half = members.size() / 2;
        std::vector<int> h1(members.begin(), members.begin() + static_cast<long>(half));
        std::vector<int> h2(members.begin() + static_cast<long>(half), members.end());
        Bitset h2_bits = Bitset::from_vector(static_cast<std::size_t>(big_n), h2);

        const int c = densest_color_between(coloring, h1, h2_bits);
        BipartiteGraph bip =
            bipartite_between(coloring.classes[static_cast<std::size_t>(c)], h1, h2);

        DrcParams params;
        params.a = 1;
        params.d = d;
        params.t = 2 * d;
        params.x = x;
        params.epsilon = Rational(1, 2);

        bool placed = false;
        for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
            try {
                DrcOutcome w = drc_find_witness(
                    bip, params, 16, rng.fork(100 + static_cast<std::uint64_t>(attempt)).seed());
                if (w.bad_count >= budget0) continue;
                Bitset next(static_cast<std::size_t>(big_n));
                w.A.for_each([&](int r) {
                    next.set(static_cast<std::size_t>(h2[static_cast<std::size_t>(r)]));
                });
                // The halving plus the witness size bound give the per-level
                // shrinkage guarantee.
                if (out.result.hypothesis_ok &&
                    Rational(next.count()) * rational_pow(Rational(2), 2 * d + 2) <
                        Rational(trimmed))
                    throw invalid_embedding_error(
                        "mono_embed_2color: chain level lost the 2^{-2d-2} bound");
                chain.push_back(next);
                placed = true;
            } catch (const witness_not_found_error&) {
            } catch (const precondition_error&) {
                break;  // density below 1/2 cannot improve with retries
            }
        }
        if (!placed) {
            out.result.status = EmbedStatus::HypothesisFailure;
            out.result.hypothesis_ok = false;
            out.result.failure_level = static_cast<int>(i + 1);
            out.result.diagnostic = "no chain witness at level " + std::to_string(i + 1);
            return out;
        }
        link_colors.push_back(c);
        out.chain_sizes.push_back(static_cast<long>(chain.back().count()));
    }

    // Pigeonhole: with 2q-3 links and two colors, one appears >= q-1 times.
    const long count0 =
        static_cast<long>(std::count(link_colors.begin(), link_colors.end(), 0));
    const int popular = count0 >= q - 1 ? 0 : 1;

    NestedFamily nested;
    nested.levels.push_back(chain.front());
    for (std::size_t i = 0; i < link_colors.size() &&
                            static_cast<long>(nested.levels.size()) < q;
         ++i)
        if (link_colors[i] == popular) nested.levels.push_back(chain[i + 1]);

    const bool was_best_effort = out.result.best_effort;
    out.color = popular;
    out.result = embed_chromatic(h, parts,
                                 coloring.classes[static_cast<std::size_t>(popular)],
                                 nested, x, d);
    if (was_best_effort) {
        out.result.best_effort = true;
        out.result.hypothesis_ok = false;
    }
    return out;
}

ColoredEmbedResult multicolor_bipartite_driver(const std::vector<BipartiteGraph>& hs,
                                               const EdgeColoring& coloring,
                                               std::uint64_t seed) {
    const int k = coloring.k();
    if (static_cast<int>(hs.size()) != k)
        throw precondition_error("multicolor_bipartite_driver: one pattern per color");
    int c = 0;
    for (int j = 1; j < k; ++j)
        if (coloring.classes[static_cast<std::size_t>(j)].m() >
            coloring.classes[static_cast<std::size_t>(c)].m())
            c = j;
    ColoredEmbedResult out;
    out.color = c;
    out.result = embed_bipartite_dense(hs[static_cast<std::size_t>(c)],
                                       coloring.classes[static_cast<std::size_t>(c)],
                                       Rational(1, k), seed);
    return out;
}

EhOutcome erdos_hajnal_driver(const Graph& g, long t, const SearchBudget& budget) {
    if (t < 1) throw precondition_error("erdos_hajnal_driver: t must be >= 1");
    EhOutcome out;
    try {
        Bitset ind = max_independent_set(g, budget);
        if (static_cast<long>(ind.count()) >= t) {
            Bitset take(static_cast<std::size_t>(g.n()));
            long kept = 0;
            for (int v = ind.first(); v >= 0 && kept < t;
                 v = ind.next(static_cast<std::size_t>(v))) {
                take.set(static_cast<std::size_t>(v));
                ++kept;
            }
            take.for_each([&](int u) {
                take.for_each([&](int v) {
                    if (u < v && g.has_edge(u, v))
                        throw invalid_embedding_error(
                            "erdos_hajnal_driver: oracle returned a non-independent set");
                });
            });
            out.kind = EhOutcome::Kind::IndependentSet;
            out.side1 = take;
            return out;
        }
    } catch (const budget_error&) {
        // fall through to the bi-dense route
    }

    const Rational eps(1, 4 * t);
    for (long z : {2 * t, t}) {
        if (g.n() < 2 * z) continue;
        BidenseResult bd = bidense_search(g, z, eps, budget);
        if (!bd.found) continue;

        // t vertices of W1 chosen to keep the running common neighborhood in
        // W2 as large as possible.
        Bitset x(static_cast<std::size_t>(g.n()));
        Bitset common = bd.w2;
        Bitset pool = bd.w1;
        bool ok = true;
        for (long i = 0; i < t; ++i) {
            int best = -1;
            std::size_t best_sz = 0;
            pool.for_each([&](int v) {
                const std::size_t sz = common.count_and(g.row(v));
                if (best < 0 || sz > best_sz) {
                    best = v;
                    best_sz = sz;
                }
            });
            if (best < 0 || static_cast<long>(best_sz) < t) {
                ok = false;
                break;
            }
            x.set(static_cast<std::size_t>(best));
            pool.reset(static_cast<std::size_t>(best));
            common &= g.row(best);
        }
        if (!ok) continue;
        Bitset y(static_cast<std::size_t>(g.n()));
        long kept = 0;
        for (int v = common.first(); v >= 0 && kept < t;
             v = common.next(static_cast<std::size_t>(v))) {
            y.set(static_cast<std::size_t>(v));
            ++kept;
        }
        x.for_each([&](int u) {
            y.for_each([&](int v) {
                if (!g.has_edge(u, v))
                    throw invalid_embedding_error(
                        "erdos_hajnal_driver: extracted pair is not complete bipartite");
            });
        });
        out.kind = EhOutcome::Kind::Biclique;
        out.side1 = x;
        out.side2 = y;
        return out;
    }
    out.kind = EhOutcome::Kind::Failure;
    out.diagnostic = "no independent set of size " + std::to_string(t) +
                     " and no bi-dense pair within budget";
    return out;
}

std::pair<Bitset, Bitset> clique_or_independent_step(const Graph& g, const Bitset& w1,
                                                     const Bitset& w2,
                                                     const SearchBudget& budget) {
    if (w1.intersects(w2))
        throw precondition_error("clique_or_independent_step: sets must be disjoint");
    std::vector<int> ids1;
    Graph g1 = g.induced(w1, &ids1);
    Bitset x_local = max_clique(g1, budget);
    Bitset x(static_cast<std::size_t>(g.n()));
    x_local.for_each(
        [&](int v) { x.set(static_cast<std::size_t>(ids1[static_cast<std::size_t>(v)])); });

    Bitset pool = common_neighborhood(g, x);
    pool &= w2;
    Bitset y(static_cast<std::size_t>(g.n()));
    if (pool.any()) {
        std::vector<int> ids2;
        Graph g2 = g.induced(pool, &ids2);
        Bitset y_local = max_clique(g2, budget);
        y_local.for_each([&](int v) {
            y.set(static_cast<std::size_t>(ids2[static_cast<std::size_t>(v)]));
        });
    }

    Bitset both = x | y;
    both.for_each([&](int u) {
        both.for_each([&](int v) {
            if (u < v && !g.has_edge(u, v))
                throw invalid_embedding_error(
                    "clique_or_independent_step: X ∪ Y is not a clique");
        });
    });
    return {x, y};
}

ColoredEmbedResult induced_ramsey_driver(const Graph& h, const Graph& gamma,
                                         const EdgeColoring& coloring,
                                         const PseudoRandomCertificate& cert, long m,
                                         const Rational& epsilon, std::uint64_t seed) {
    if (coloring.host.n() != gamma.n() || coloring.host.m() != gamma.m())
        throw precondition_error("induced_ramsey_driver: coloring must cover the host");
    if (cert.p > Rational(1, 2))
        throw precondition_error("induced_ramsey_driver: certificate density above 1/2");
    if (epsilon <= 0 || epsilon > 1)
        throw precondition_error("induced_ramsey_driver: epsilon outside (0,1]");

    ColoredEmbedResult out;
    const long n = h.n();
    const int k = coloring.k();
    if (n < 1) throw precondition_error("induced_ramsey_driver: empty pattern");
    if (n == 1) {
        out.color = 0;
        out.result.status = EmbedStatus::Ok;
        out.result.embedding = Embedding{{0}, EmbedMode::InducedPair};
        return out;
    }
    if (m < 2 * n) {
        out.result.status = EmbedStatus::SizeError;
        out.result.diagnostic = "need m >= 2n";
        return out;
    }
    const long x = static_cast<long>(
        ceil_int(rational_pow(1 - 3 * cert.p / 2, -n) * m));

    const long links = static_cast<long>(k) * (n - 2) + 1;
    std::vector<Bitset> chain;
    chain.push_back(gamma.vertices());
    std::vector<int> link_colors;
    Rng base(seed);
    out.chain_sizes.push_back(static_cast<long>(chain.back().count()));

    for (long i = 0; i < links; ++i) {
        const Bitset& b = chain.back();
        // Densest color inside the current level.
        int c = 0;
        long best_cnt = -1;
        for (int j = 0; j < k; ++j) {
            long cnt = 0;
            const Graph& cls = coloring.classes[static_cast<std::size_t>(j)];
            b.for_each([&](int v) {
                cnt += static_cast<long>(cls.row(v).count_and(b));
            });
            if (cnt > best_cnt) {
                best_cnt = cnt;
                c = j;
            }
        }

        std::vector<int> old_ids;
        Graph sub = coloring.classes[static_cast<std::size_t>(c)].induced(b, &old_ids);
        Rng rng = base.fork(static_cast<std::uint64_t>(i) + 1);
        bool placed = false;
        std::string fail_reason = "no chain witness";
        for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
            try {
                CutPartition cut = balanced_max_cut_partition(
                    sub, rng.fork(static_cast<std::uint64_t>(attempt)).seed());
                std::vector<int> left_ids, right_ids;
                BipartiteGraph bip =
                    bipartite_from_partition(sub, cut.v1, &left_ids, &right_ids);
                const int keep = std::min(bip.left_size(), bip.right_size());
                if (keep < 1) break;
                if (bip.left_size() != bip.right_size()) {
                    BipartiteGraph eq(keep, keep);
                    for (int l = 0; l < keep; ++l)
                        bip.left_row(l).for_each([&](int r) {
                            if (r < keep) eq.add_edge(l, r);
                        });
                    bip = std::move(eq);
                    left_ids.resize(static_cast<std::size_t>(keep));
                    right_ids.resize(static_cast<std::size_t>(keep));
                }

                DrcParams params;
                params.a = 1;
                params.d = n;
                params.t = 4 * n;
                params.x = x;
                params.epsilon = epsilon;
                DrcOutcome w = drc_find_witness(
                    bip, params, 16,
                    rng.fork(100 + static_cast<std::uint64_t>(attempt)).seed());
                Bitset next(static_cast<std::size_t>(gamma.n()));
                w.A.for_each([&](int r) {
                    next.set(static_cast<std::size_t>(
                        old_ids[static_cast<std::size_t>(
                            right_ids[static_cast<std::size_t>(r)])]));
                });
                if (next.none()) continue;
                chain.push_back(next);
                placed = true;
            } catch (const witness_not_found_error& e) {
                fail_reason = e.what();
            } catch (const precondition_error& e) {
                fail_reason = e.what();
                break;  // density below epsilon cannot improve with retries
            }
        }
        if (!placed) {
            out.result.status = EmbedStatus::HypothesisFailure;
            out.result.hypothesis_ok = false;
            out.result.failure_level = static_cast<int>(i + 1);
            out.result.diagnostic = "chain level " + std::to_string(i + 1) + ": " +
                                    fail_reason;
            return out;
        }
        link_colors.push_back(c);
        out.chain_sizes.push_back(static_cast<long>(chain.back().count()));
    }

    // Pigeonhole: with k(n-2)+1 links and k colors, one appears >= n-1 times.
    int popular = 0;
    long popular_cnt = -1;
    for (int j = 0; j < k; ++j) {
        const long cnt =
            static_cast<long>(std::count(link_colors.begin(), link_colors.end(), j));
        if (cnt > popular_cnt) {
            popular_cnt = cnt;
            popular = j;
        }
    }

    // Levels: the targets of the first n-1 popular links, then the set
    // right below the last of them.
    NestedFamily nested;
    std::size_t last = 0;
    for (std::size_t i = 0;
         i < link_colors.size() && static_cast<long>(nested.levels.size()) < n - 1; ++i)
        if (link_colors[i] == popular) {
            nested.levels.push_back(chain[i]);
            last = i;
        }
    nested.levels.push_back(chain[last + 1]);

    out.color = popular;
    out.result = embed_induced(h, coloring.classes[static_cast<std::size_t>(popular)],
                               gamma.complement(), nested, m);
    return out;
}

}  // namespace egt
