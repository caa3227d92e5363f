#include "doctest.h"

#include "egt/errors.hpp"
#include "egt/generators.hpp"
#include "egt/graph.hpp"
#include "egt/oracles.hpp"
#include "egt/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

using namespace egt;

TEST_CASE("hypercube: order, size, regularity, bipartiteness") {
    Graph q3 = hypercube(3);
    CHECK(q3.n() == 8);
    CHECK(q3.m() == 12);
    for (int d = 1; d <= 6; ++d) {
        Graph q = hypercube(d);
        CHECK(q.n() == (1 << d));
        CHECK(q.m() == static_cast<long>(d) * (1 << (d - 1)) / 1);
        for (int v = 0; v < q.n(); ++v) CHECK(q.degree(v) == d);
        // bipartite by parity: no edge within a parity class
        for (auto [u, v] : q.edges())
            CHECK(__builtin_popcount(static_cast<unsigned>(u)) % 2 !=
                  __builtin_popcount(static_cast<unsigned>(v)) % 2);
    }
    CHECK_THROWS_AS(hypercube(0), precondition_error);
    CHECK_THROWS_AS(hypercube(21), precondition_error);
}

TEST_CASE("complete, cycle, path families") {
    CHECK(complete_graph(6).m() == 15);
    CHECK(cycle_graph(5).m() == 5);
    CHECK(path_graph(5).m() == 4);
    CHECK(complete_bipartite(3, 4).m() == 12);
    CHECK(complete_bipartite(3, 4).total() == 7);
    for (int v = 0; v < 5; ++v) CHECK(cycle_graph(5).degree(v) == 2);
}

TEST_CASE("one subdivision: part sizes and degree-2 right part") {
    Graph k4 = complete_graph(4);
    BipartiteGraph s = one_subdivision(k4);
    CHECK(s.left_size() == 4);
    CHECK(s.right_size() == 6);
    CHECK(s.m() == 12);  // two ends per subdivided edge
    for (int r = 0; r < s.right_size(); ++r) CHECK(s.right_degree(r) == 2);
    for (int l = 0; l < s.left_size(); ++l) CHECK(s.left_degree(l) == 3);
    CHECK_THROWS_AS(one_subdivision(Graph(3)), precondition_error);  // isolated vertices
}

TEST_CASE("subdivision squares back to the original graph") {
    // two branch vertices are adjacent in H iff they share a neighbor in the
    // subdivision; checked for every host up to 6 vertices in a small corpus
    for (int seed = 0; seed < 8; ++seed) {
        Graph h = random_graph(6, Rational(1, 2), 300 + seed);
        bool isolated = false;
        for (int v = 0; v < h.n(); ++v) isolated |= h.degree(v) == 0;
        if (isolated) continue;
        BipartiteGraph s = one_subdivision(h);
        for (int u = 0; u < h.n(); ++u)
            for (int v = u + 1; v < h.n(); ++v) {
                bool share = s.left_row(u).intersects(s.left_row(v));
                CHECK(share == h.has_edge(u, v));
            }
    }
}

TEST_CASE("paley graphs: regular, self-paired squares, determinism") {
    for (int q : {13, 17, 29}) {
        Graph p = paley(q);
        CHECK(p.n() == q);
        CHECK(p.m() == static_cast<long>(q) * (q - 1) / 4);
        for (int v = 0; v < q; ++v) CHECK(p.degree(v) == (q - 1) / 2);
        // adjacency is translation invariant: u~v iff 0~(v-u)
        for (int u = 0; u < q; ++u)
            for (int v = 0; v < q; ++v)
                if (u != v) CHECK(p.has_edge(u, v) == p.has_edge(0, (v - u + q) % q));
    }
    CHECK_THROWS_AS(paley(15), precondition_error);  // not prime
    CHECK_THROWS_AS(paley(7), precondition_error);   // 3 mod 4
}

TEST_CASE("paley(5) is the 5-cycle") {
    Graph p5 = paley(5);
    CHECK(p5.m() == 5);
    CHECK(contains_subgraph(cycle_graph(5), p5));
    CHECK_FALSE(contains_subgraph(complete_graph(3), p5));
}

TEST_CASE("random graphs: determinism per seed, edge count near expectation") {
    Graph a = random_graph(50, Rational(11, 20), 7);
    Graph b = random_graph(50, Rational(11, 20), 7);
    CHECK(a == b);
    Graph c = random_graph(50, Rational(11, 20), 8);
    CHECK_FALSE(a == c);
    // mean 673.75, sd ~17.4; 6 sigma window
    CHECK(a.m() > 565);
    CHECK(a.m() < 780);
    CHECK(random_graph(20, Rational(0), 1).m() == 0);
    CHECK(random_graph(20, Rational(1), 1).m() == 190);
}

TEST_CASE("random bipartite: sizes and determinism") {
    BipartiteGraph g = random_bipartite(12, 20, Rational(1, 3), 4);
    CHECK(g.left_size() == 12);
    CHECK(g.right_size() == 20);
    CHECK(g == random_bipartite(12, 20, Rational(1, 3), 4));
    CHECK(random_bipartite(9, Rational(1), 2).m() == 81);
    BipartiteGraph sq = random_bipartite(9, Rational(1, 2), 2);
    CHECK(sq.left_size() == 9);
    CHECK(sq.right_size() == 9);
}

TEST_CASE("random d-degenerate graphs are d-degenerate by construction") {
    for (int seed = 0; seed < 10; ++seed) {
        int d = 1 + seed % 4;
        Graph g = random_d_degenerate(30, d, 10, 600 + seed);
        CHECK(g.n() == 30);
        CHECK(g.max_degree() <= 10);
        // vertex i has at most min(d, i) earlier neighbors in the build order
        for (int i = 0; i < 30; ++i) {
            int back = 0;
            g.row(i).for_each([&](int w) { if (w < i) ++back; });
            CHECK(back <= std::min(d, i));
        }
    }
}
