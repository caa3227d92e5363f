#include "doctest.h"

#include "egt/bidense.hpp"
#include "egt/coloring.hpp"
#include "egt/drivers.hpp"
#include "egt/embedders.hpp"
#include "egt/errors.hpp"
#include "egt/generators.hpp"
#include "egt/goodness.hpp"
#include "egt/oracles.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace egt;

namespace {

bool edge_images_in_nice_sets(const Hypergraph& hyp, const NicePredicate& nice,
                              const std::vector<int>& map) {
    for (const std::vector<int>& e : hyp.edges()) {
        std::vector<int> img;
        for (int v : e) img.push_back(map[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        if (!nice(img)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hypergraph greedy: all-nice host embeds and respects niceness") {
    Hypergraph hyp(4, {{0, 1}, {1, 2}, {2, 3}});
    NicePredicate all_nice = [](const std::vector<int>&) { return true; };
    Bitset host(20, true);
    EmbedResult r = embed_hypergraph_greedy(hyp, all_nice, host, 1);
    REQUIRE(r.status == EmbedStatus::Ok);
    const std::vector<int>& f = r.embedding->map;
    CHECK(f.size() == 4);
    CHECK(std::set<int>(f.begin(), f.end()).size() == 4);
    CHECK(edge_images_in_nice_sets(hyp, all_nice, f));
    // with every h-set nice the count is all injections
    CHECK(count_hypergraph_embeddings(hyp, all_nice, host) == 20 * 19 * 18 * 17);
}

TEST_CASE("hypergraph greedy reports a failed density hypothesis honestly") {
    Hypergraph hyp(3, {{0, 1}, {1, 2}});
    NicePredicate none_nice = [](const std::vector<int>&) { return false; };
    Bitset host(16, true);
    EmbedResult r = embed_hypergraph_greedy(hyp, none_nice, host, 1);
    CHECK_FALSE(r.status == EmbedStatus::Ok);
    CHECK_FALSE(r.hypothesis_ok);
    CHECK(count_hypergraph_embeddings(hyp, none_nice, host) == 0);
}

TEST_CASE("hypergraph embedding count matches direct recursion on a small instance") {
    Hypergraph hyp(3, {{0, 1}, {1, 2}});
    // nice iff the pair sums to an even number
    NicePredicate parity = [](const std::vector<int>& s) {
        int sum = 0;
        for (int v : s) sum += v;
        return sum % 2 == 0;
    };
    Bitset host(8, true);
    std::uint64_t direct = 0;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) {
                if (a == b || b == c || a == c) continue;
                if ((a + b) % 2 == 0 && (b + c) % 2 == 0) ++direct;
            }
    CHECK(count_hypergraph_embeddings(hyp, parity, host) == Int(direct));
}

TEST_CASE("bipartite dense pipeline: cycle into a complete host, validated") {
    BipartiteGraph c4(2, 2);
    c4.add_edge(0, 0);
    c4.add_edge(0, 1);
    c4.add_edge(1, 0);
    c4.add_edge(1, 1);
    Graph host = complete_graph(256);
    EmbedResult r = embed_bipartite_dense(c4, host, Rational(1), 3);
    REQUIRE(r.status == EmbedStatus::Ok);
    CHECK(validate_embedding(c4.to_graph(), host, *r.embedding));
}

TEST_CASE("bipartite dense pipeline on a dense random host") {
    BipartiteGraph p4(2, 2);  // path on 4 vertices
    p4.add_edge(0, 0);
    p4.add_edge(1, 0);
    p4.add_edge(1, 1);
    Graph host = random_graph(512, Rational(9, 10), 77);
    EmbedResult r = embed_bipartite_dense(p4, host, Rational(3, 4), 5);
    REQUIRE(r.status == EmbedStatus::Ok);
    CHECK(validate_embedding(p4.to_graph(), host, *r.embedding));
}

TEST_CASE("bipartite dense pipeline refuses undersized hosts with a diagnostic") {
    BipartiteGraph c4 = complete_bipartite(2, 2);
    EmbedResult r = embed_bipartite_dense(c4, complete_graph(40), Rational(1, 2), 1);
    CHECK(r.status == EmbedStatus::SizeError);
    CHECK_FALSE(r.diagnostic.empty());
    CHECK_THROWS_AS(embed_bipartite_dense(c4, complete_graph(40), Rational(2), 1),
                    precondition_error);
}

TEST_CASE("ledger greedy core embeds into complete bipartite hosts part-respectingly") {
    BipartiteGraph pat(3, 3);
    pat.add_edge(0, 0);
    pat.add_edge(0, 1);
    pat.add_edge(1, 1);
    pat.add_edge(2, 2);
    BipartiteGraph host = complete_bipartite(40, 40);
    Bitset a1(40, true), a2(40, true);
    long x = 30, d = 2;
    EmbedResult r = embed_bidegenerate_core(pat, host, a1, a2, x, d, pat.max_degree(),
                                            degenerate_budgets(x, d, pat.max_degree()));
    REQUIRE(r.status == EmbedStatus::Ok);
    CHECK(validate_embedding_parts(pat, host, *r.embedding));
}

TEST_CASE("ordered ledger greedy accepts a degeneracy order") {
    BipartiteGraph pat(2, 3);
    pat.add_edge(0, 0);
    pat.add_edge(0, 1);
    pat.add_edge(1, 1);
    pat.add_edge(1, 2);
    std::vector<int> order{0, 2, 1, 3, 4};  // global ids, each with <= 2 back-neighbors
    BipartiteGraph host = complete_bipartite(36, 36);
    Bitset a1(36, true), a2(36, true);
    long x = 24, p = 3;
    EmbedResult r = embed_bidegenerate_core_ordered(pat, order, host, a1, a2, x, p, 4,
                                                    arrangeable_budgets(x, p));
    REQUIRE(r.status == EmbedStatus::Ok);
    CHECK(validate_embedding_parts(pat, host, *r.embedding));
}

TEST_CASE("degenerate pipeline rejects infeasible thresholds with SizeError") {
    BipartiteGraph pat(2, 2);
    pat.add_edge(0, 0);
    pat.add_edge(1, 1);
    Graph host = complete_graph(64);
    EmbedResult r = embed_degenerate(pat, host, Rational(1), Rational(1), 2);
    CHECK(r.status == EmbedStatus::SizeError);
    CHECK_THROWS_AS(embed_degenerate(pat, host, Rational(0), Rational(1), 2),
                    precondition_error);
}

TEST_CASE("arrangeable pipeline verifies the claimed ordering first") {
    BipartiteGraph pat = complete_bipartite(3, 3);
    std::vector<int> order{0, 1, 2, 3, 4, 5};
    CHECK_THROWS_AS(
        embed_arrangeable(pat, order, 1, complete_graph(64), Rational(1), 1),
        precondition_error);
}

TEST_CASE("chromatic greedy: 3-partite cycle into nested levels of a complete host") {
    Graph c5 = cycle_graph(5);
    std::vector<int> parts;
    REQUIRE(chromatic_number(c5, &parts) == 3);
    Graph host = complete_graph(64);
    NestedFamily nested;
    Bitset l0(64), l1(64), l2(64);
    for (int v = 0; v < 64; ++v) l0.set(v);
    for (int v = 0; v < 48; ++v) l1.set(v);
    for (int v = 0; v < 32; ++v) l2.set(v);
    nested.levels = {l0, l1, l2};
    EmbedResult r = embed_chromatic(c5, parts, host, nested, 20, 2);
    REQUIRE(r.status == EmbedStatus::Ok);
    CHECK(validate_embedding(c5, host, *r.embedding));
    for (int v = 0; v < 5; ++v)
        CHECK(nested.levels[static_cast<std::size_t>(parts[static_cast<std::size_t>(v)])]
                  .test(r.embedding->map[static_cast<std::size_t>(v)]));
}

TEST_CASE("chromatic greedy: empty pattern maps injectively") {
    Graph h(4);
    std::vector<int> parts{0, 0, 0, 0};
    NestedFamily nested;
    nested.levels = {Bitset(30, true)};
    EmbedResult r = embed_chromatic(h, parts, complete_graph(30), nested, 16, 2);
    REQUIRE(r.status == EmbedStatus::Ok);
    std::set<int> img(r.embedding->map.begin(), r.embedding->map.end());
    CHECK(img.size() == 4);
}

TEST_CASE("chromatic greedy rejects a non-proper partition") {
    Graph k2 = complete_graph(2);
    NestedFamily nested;
    nested.levels = {Bitset(30, true)};
    CHECK_THROWS_AS(
        embed_chromatic(k2, {0, 0}, complete_graph(30), nested, 16, 2),
        precondition_error);
}

TEST_CASE("subdivision embedder: triangle into a large complete host gives a 6-cycle") {
    Graph k3 = complete_graph(3);
    Graph host = complete_graph(1822);
    EmbedResult r = embed_subdivision(k3, host, Rational(3, 4), 9);
    REQUIRE(r.status == EmbedStatus::Ok);
    Graph sub = one_subdivision(k3).to_graph();
    CHECK(validate_embedding(sub, host, *r.embedding));
    CHECK(contains_subgraph(cycle_graph(6), sub));
}

TEST_CASE("subdivision embedder: undersized hosts refused, best-effort on request") {
    Graph k3 = complete_graph(3);
    Graph host = complete_graph(200);
    EmbedResult strict = embed_subdivision(k3, host, Rational(3, 4), 1);
    CHECK(strict.status == EmbedStatus::SizeError);
    EmbedResult loose = embed_subdivision(k3, host, Rational(3, 4), 1, true);
    CHECK(loose.best_effort);
    if (loose.status == EmbedStatus::Ok)
        CHECK(validate_embedding(one_subdivision(k3).to_graph(), host, *loose.embedding));
    EmbedResult odd = embed_subdivision(k3, complete_graph(201), Rational(1, 2), 1);
    CHECK(odd.status == EmbedStatus::SizeError);  // odd host order
}

TEST_CASE("induced greedy: edge and non-edge patterns against a random host") {
    Graph gamma = random_graph(520, Rational(1, 2), 404);
    Graph f = gamma.complement();
    NestedFamily nested;
    Bitset l0(520, true), l1(520);
    for (int v = 0; v < 40; ++v) l1.set(v);
    nested.levels = {l0, l1};

    EmbedResult edge = embed_induced(complete_graph(2), gamma, f, nested, 4);
    REQUIRE(edge.status == EmbedStatus::Ok);
    CHECK(validate_embedding_induced(complete_graph(2), gamma, f, *edge.embedding));

    EmbedResult non = embed_induced(Graph(2), gamma, f, nested, 4);
    REQUIRE(non.status == EmbedStatus::Ok);
    CHECK(validate_embedding_induced(Graph(2), gamma, f, *non.embedding));
    CHECK_FALSE(gamma.has_edge(non.embedding->map[0], non.embedding->map[1]));
}

TEST_CASE("induced greedy preconditions: shared edges and undersized chains") {
    Graph gamma = random_graph(40, Rational(1, 2), 7);
    NestedFamily nested;
    nested.levels = {Bitset(40, true), Bitset(40, true)};
    CHECK_THROWS_AS(embed_induced(complete_graph(2), gamma, gamma, nested, 4),
                    precondition_error);  // hosts are not edge-disjoint
    Graph f = gamma.complement();
    EmbedResult r = embed_induced(complete_graph(2), gamma, f, nested, 100);
    CHECK(r.status == EmbedStatus::SizeError);  // m exceeds the last level
}

TEST_CASE("two-coloring driver finds a monochromatic path when one color covers all") {
    Graph p3 = path_graph(3);
    Graph host = complete_graph(1024);
    EdgeColoring mono = monochromatic_coloring(host, 2, 0);
    ColoredEmbedResult r = mono_embed_2color(p3, mono, 11);
    CHECK(r.color == 0);
    REQUIRE(r.result.status == EmbedStatus::Ok);
    CHECK(validate_embedding(p3, mono.classes[0], *r.result.embedding));
    // audited chain never shrinks faster than its guaranteed factor
    for (std::size_t i = 0; i + 1 < r.chain_sizes.size(); ++i)
        CHECK(64 * r.chain_sizes[i + 1] >= r.chain_sizes[i]);
}

TEST_CASE("two-coloring driver: edgeless pattern succeeds on any coloring") {
    Graph h(3);
    EdgeColoring col = random_edge_coloring(complete_graph(64), 2, 5);
    ColoredEmbedResult r = mono_embed_2color(h, col, 1);
    REQUIRE(r.result.status == EmbedStatus::Ok);
    std::set<int> img(r.result.embedding->map.begin(), r.result.embedding->map.end());
    CHECK(img.size() == 3);
}

TEST_CASE("two-coloring driver refuses undersized hosts unless best-effort") {
    Graph c4 = cycle_graph(4);
    EdgeColoring col = random_edge_coloring(complete_graph(100), 2, 5);
    ColoredEmbedResult r = mono_embed_2color(c4, col, 1);
    CHECK(r.result.status == EmbedStatus::SizeError);
}

TEST_CASE("multicolor driver embeds the majority color's pattern") {
    std::vector<BipartiteGraph> hs;
    BipartiteGraph edge(1, 1);
    edge.add_edge(0, 0);
    hs.push_back(edge);
    hs.push_back(edge);
    Graph host = complete_graph(256);
    EdgeColoring col = random_edge_coloring(host, 2, 9);
    ColoredEmbedResult r = multicolor_bipartite_driver(hs, col, 2);
    if (r.result.status == EmbedStatus::Ok) {
        const std::vector<int>& f = r.result.embedding->map;
        CHECK(col.classes[static_cast<std::size_t>(r.color)].has_edge(f[0], f[1]));
    }
    CHECK(col.classes[static_cast<std::size_t>(r.color)].m() >= host.m() / 2);
}

TEST_CASE("biclique-or-independent driver outputs are oracle-checked") {
    // empty graph: independent set
    EhOutcome empty = erdos_hajnal_driver(Graph(30), 4);
    REQUIRE(empty.kind == EhOutcome::Kind::IndependentSet);
    CHECK(empty.side1.count() >= 4);

    // complete graph: no independent set of size 3, so the bi-dense route
    EhOutcome full = erdos_hajnal_driver(complete_graph(40), 3);
    REQUIRE(full.kind == EhOutcome::Kind::Biclique);
    CHECK(full.side1.count() >= 3);
    CHECK(full.side2.count() >= 3);
    CHECK_FALSE(full.side1.intersects(full.side2));

    // random graph: whatever comes back must be genuine
    Graph g = random_graph(60, Rational(1, 2), 31);
    EhOutcome out = erdos_hajnal_driver(g, 3);
    if (out.kind == EhOutcome::Kind::IndependentSet) {
        std::vector<int> s = out.side1.to_vector();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK_FALSE(g.has_edge(s[i], s[j]));
    } else if (out.kind == EhOutcome::Kind::Biclique) {
        out.side1.for_each([&](int u) {
            out.side2.for_each([&](int v) { CHECK(g.has_edge(u, v)); });
        });
    }
}

TEST_CASE("clique-plus-clique step returns a verified clique union") {
    Graph g = random_graph(40, Rational(3, 4), 13);
    Bitset w1(40), w2(40);
    for (int v = 0; v < 20; ++v) w1.set(v);
    for (int v = 20; v < 40; ++v) w2.set(v);
    auto [x, y] = clique_or_independent_step(g, w1, w2);
    Bitset all = x | y;
    std::vector<int> s = all.to_vector();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) CHECK(g.has_edge(s[i], s[j]));
    CHECK(x.is_subset_of(w1));
}

TEST_CASE("bi-dense search outputs validate; complete hosts are trivially bi-dense") {
    BidenseResult r = bidense_search(complete_graph(30), 6, Rational(1, 8));
    REQUIRE(r.found);
    CHECK(validate_bidense(complete_graph(30), r.w1, r.w2, 6, Rational(1, 8)));
    for (int seed = 0; seed < 6; ++seed) {
        Graph g = random_graph(50, Rational(4, 5), 880 + seed);
        BidenseResult b = bidense_search(g, 4, Rational(1, 4));
        if (b.found) CHECK(validate_bidense(g, b.w1, b.w2, 4, Rational(1, 4)));
    }
}

TEST_CASE("induced-coloring driver: single-vertex pattern is trivial, outputs honest") {
    Graph gamma = paley(13);
    PseudoRandomCertificate cert = certify_pseudorandom_spectral(gamma);
    EdgeColoring col = random_edge_coloring(gamma, 2, 3);
    ColoredEmbedResult one =
        induced_ramsey_driver(Graph(1), gamma, col, cert, 4, Rational(1, 4), 1);
    REQUIRE(one.result.status == EmbedStatus::Ok);

    // K_2 against a monochromatic coloring of a larger quadratic-residue host
    Graph big = paley(1201);
    PseudoRandomCertificate bigcert = certify_pseudorandom_spectral(big);
    CHECK(bigcert.p == Rational(1, 2));
    EdgeColoring mono = monochromatic_coloring(big, 2, 0);
    ColoredEmbedResult r =
        induced_ramsey_driver(complete_graph(2), big, mono, bigcert, 4, Rational(1, 4), 5);
    if (r.result.status == EmbedStatus::Ok) {
        const std::vector<int>& f = r.result.embedding->map;
        CHECK(mono.classes[0].has_edge(f[0], f[1]));
    } else {
        CHECK_FALSE(r.result.diagnostic.empty());
    }
}

TEST_CASE("induced-coloring driver rejects hosts denser than one half") {
    Graph dense = complete_graph(12);
    PseudoRandomCertificate cert = certify_pseudorandom_spectral(dense);
    EdgeColoring col = random_edge_coloring(dense, 2, 3);
    CHECK_THROWS_AS(
        induced_ramsey_driver(complete_graph(2), dense, col, cert, 4, Rational(1, 4), 1),
        precondition_error);
}
