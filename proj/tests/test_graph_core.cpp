#include "doctest.h"

#include "egt/bitset.hpp"
#include "egt/degeneracy.hpp"
#include "egt/embedding.hpp"
#include "egt/errors.hpp"
#include "egt/generators.hpp"
#include "egt/goodness.hpp"
#include "egt/graph.hpp"
#include "egt/hypergraph.hpp"
#include "egt/maxcut.hpp"
#include "egt/rational.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace egt;

TEST_CASE("bitset set/test/count and word boundaries") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(65));
    b.reset(64);
    CHECK(b.count() == 3);
    CHECK(b.first() == 0);
    CHECK(b.next(0) == 63);
    CHECK(b.next(63) == 129);
    CHECK(b.next(129) == -1);
}

TEST_CASE("bitset algebra matches set semantics") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng.below(200);
        Bitset a(n), b(n);
        std::set<int> sa, sb;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.below(2)) { a.set(i); sa.insert(static_cast<int>(i)); }
            if (rng.below(2)) { b.set(i); sb.insert(static_cast<int>(i)); }
        }
        Bitset i = a & b, u = a | b;
        std::size_t ic = 0;
        for (int v : sa) ic += sb.count(v);
        CHECK(i.count() == ic);
        CHECK(a.count_and(b) == ic);
        CHECK(u.count() == sa.size() + sb.size() - ic);
        CHECK(a.count_and_at_least(b, ic));
        CHECK_FALSE(a.count_and_at_least(b, ic + 1));
        Bitset d = a;
        d.and_not(b);
        CHECK(d.count() == sa.size() - ic);
        CHECK(d.is_subset_of(a));
        CHECK(a.complemented().count() == n - sa.size());
        CHECK((a & a.complemented()).none());
        std::vector<int> round = a.to_vector();
        CHECK(Bitset::from_vector(n, round) == a);
    }
}

TEST_CASE("graph basics: degrees, complement, induced relabeling") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 0);
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    CHECK(g.max_degree() == 2);
    CHECK(g.has_edge(1, 0));
    Graph c = g.complement();
    CHECK(c.m() == 10 - 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(g.has_edge(u, v) != c.has_edge(u, v));

    std::vector<int> old_ids;
    Graph ind = g.induced(Bitset::of(5, {0, 1, 3}), &old_ids);
    CHECK(ind.n() == 3);
    CHECK(old_ids == std::vector<int>{0, 1, 3});
    CHECK(ind.m() == 1);  // only 0-1 survives
    CHECK(ind.has_edge(0, 1));
}

TEST_CASE("common neighborhood is antitone and N(empty) is everything") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(30, Rational(1, 2), 100 + trial);
        CHECK(common_neighborhood(g, Bitset(30)) == g.vertices());
        Bitset u(30), u2(30);
        for (int i = 0; i < 30; ++i)
            if (rng.below(6) == 0) {
                u2.set(i);
                if (rng.below(2)) u.set(i);
            }
        CHECK(common_neighborhood(g, u2).is_subset_of(common_neighborhood(g, u)));
    }
}

TEST_CASE("densities are exact rationals") {
    Graph k4 = complete_graph(4);
    CHECK(edge_density(k4) == 1);
    Graph p3 = path_graph(3);
    CHECK(edge_density(p3) == Rational(2, 3));
    CHECK_THROWS_AS(edge_density(Graph(1)), degenerate_input_error);
    Bitset a = Bitset::of(3, {0}), b = Bitset::of(3, {1, 2});
    CHECK(density_between(p3, a, b) == Rational(1, 2));  // 0-1 yes, 0-2 no
}

TEST_CASE("exact arithmetic helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(60, 30) == Int("118264581564861424"));
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(7), 0) == 1);
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("0.55") == Rational(11, 20));
    CHECK(parse_rational("-2") == -2);
    CHECK(ceil_int(Rational(7, 2)) == 4);
    CHECK(ceil_int(Rational(-7, 2)) == -3);
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(floor_int(Rational(4)) == 4);
    CHECK(rational_str(Rational(3, 4)) == "3/4");
}

TEST_CASE("rng: determinism, ranges, shuffle is a permutation, forks differ") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.raw() == b.raw());
    Rng r(7);
    for (int i = 0; i < 1000; ++i) CHECK(r.below(13) < 13);
    std::vector<int> v(50);
    for (int i = 0; i < 50; ++i) v[i] = i;
    r.shuffle(v);
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < 50; ++i) CHECK(s[i] == i);
    Rng f0 = r.fork(0), f1 = r.fork(1);
    CHECK(f0.seed() != f1.seed());
    // bernoulli with extreme probabilities is exact
    CHECK_FALSE(Rng(3).bernoulli(Rational(0)));
    CHECK(Rng(3).bernoulli(Rational(1)));
}

TEST_CASE("rng sampling helpers") {
    Rng r(9);
    Bitset s = Bitset::of(40, {3, 7, 11, 20, 39});
    for (int i = 0; i < 50; ++i) CHECK(s.test(r.pick(s)));
    std::vector<int> k = r.sample_without_replacement(s, 3);
    CHECK(k.size() == 3);
    std::sort(k.begin(), k.end());
    CHECK(std::unique(k.begin(), k.end()) == k.end());
    for (int x : k) CHECK(s.test(x));
}

TEST_CASE("degeneracy order: every vertex has at most d earlier neighbors") {
    for (int seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(40, Rational(1, 4), 500 + seed);
        DegeneracyResult res = degeneracy_order(g);
        CHECK(res.order.size() == 40);
        std::vector<int> pos(40);
        for (int i = 0; i < 40; ++i) pos[res.order[i]] = i;
        int worst = 0;
        for (int i = 0; i < 40; ++i) {
            int back = 0;
            g.row(res.order[i]).for_each([&](int w) { if (pos[w] < i) ++back; });
            worst = std::max(worst, back);
        }
        CHECK(worst <= res.d);
    }
    CHECK(degeneracy_order(hypercube(4)).d == 4);
    CHECK(degeneracy_order(complete_graph(6)).d == 5);
    CHECK(degeneracy_order(cycle_graph(9)).d == 2);
}

TEST_CASE("arrangeability verification") {
    Graph p = path_graph(6);
    std::vector<int> order{0, 1, 2, 3, 4, 5};
    CHECK(verify_arrangeable(p, order, 2));
    Graph k5 = complete_graph(5);
    std::vector<int> ko{0, 1, 2, 3, 4};
    CHECK(verify_arrangeable(k5, ko, 4));
    CHECK_FALSE(verify_arrangeable(k5, ko, 2));
}

TEST_CASE("balanced max cut meets its lower bound") {
    for (int seed = 0; seed < 12; ++seed) {
        Graph g = random_graph(25 + seed, Rational(2, 5), 900 + seed);
        CutPartition cut = balanced_max_cut_partition(g, seed);
        CHECK(Int(cut.cross_edges) >= equipartition_cut_bound(g));
        CHECK((cut.v1 & cut.v2).none());
        CHECK((cut.v1 | cut.v2) == g.vertices());
        long diff = static_cast<long>(cut.v1.count()) - static_cast<long>(cut.v2.count());
        CHECK(std::abs(diff) <= 1);
        long cross = 0;
        for (auto [u, v] : g.edges())
            if (cut.v1.test(u) != cut.v1.test(v)) ++cross;
        CHECK(cross == cut.cross_edges);
    }
    CHECK_THROWS_AS(balanced_max_cut_partition(Graph(1), 0), degenerate_input_error);
}

TEST_CASE("hypergraph accessors") {
    Hypergraph h(4, {{0, 1}, {1, 2, 3}, {0, 3}});
    CHECK(h.n() == 4);
    CHECK(h.edge_size_bound() == 3);
    CHECK(h.max_degree() == 2);
    CHECK(h.incident(1) == std::vector<int>{0, 1});
    CHECK(h.incident(2) == std::vector<int>{1});
}

TEST_CASE("embedding validators accept correct maps and reject broken ones") {
    Graph c4 = cycle_graph(4);
    Graph host = complete_graph(6);
    Embedding f{{0, 2, 4, 5}, EmbedMode::Subgraph};
    CHECK(validate_embedding(c4, host, f));
    Embedding dup{{0, 2, 2, 5}, EmbedMode::Subgraph};
    CHECK_THROWS_AS(validate_embedding(c4, host, dup), invalid_embedding_error);
    Embedding missing_edge{{0, 1, 2, 3}, EmbedMode::Subgraph};
    CHECK_FALSE(validate_embedding(c4, path_graph(4), missing_edge));

    // induced-pair mode: edges into g, non-edges into f
    Graph g(4), fg(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    fg.add_edge(0, 2);
    Graph p3 = path_graph(3);
    Embedding ind{{0, 1, 2}, EmbedMode::InducedPair};
    CHECK(validate_embedding_induced(p3, g, fg, ind));
    Graph fg2(4);  // non-edge 0-2 not covered
    CHECK_FALSE(validate_embedding_induced(p3, g, fg2, ind));
}

TEST_CASE("part-respecting validator") {
    BipartiteGraph pat(1, 2);
    pat.add_edge(0, 0);
    pat.add_edge(0, 1);
    BipartiteGraph host = complete_bipartite(3, 3);
    Embedding f{{1, 3, 5}, EmbedMode::PartRespecting};  // global ids: right = 3+j
    CHECK(validate_embedding_parts(pat, host, f));
    Embedding wrong_side{{3, 4, 5}, EmbedMode::PartRespecting};
    CHECK_FALSE(validate_embedding_parts(pat, host, wrong_side));
}

TEST_CASE("nested family validation") {
    NestedFamily nf;
    nf.levels = {Bitset::of(8, {0, 1, 2, 3, 4}), Bitset::of(8, {1, 2, 4}),
                 Bitset::of(8, {2, 4})};
    nf.size_bounds = {Int(4), Int(3), Int(2)};
    CHECK_NOTHROW(nf.validate());
    nf.size_bounds[1] = Int(4);  // claimed bound above the actual size
    CHECK_THROWS_AS(nf.validate(), precondition_error);
    nf.size_bounds.clear();
    nf.levels.push_back(Bitset::of(8, {3}));  // breaks containment
    CHECK_THROWS_AS(nf.validate(), precondition_error);
}
