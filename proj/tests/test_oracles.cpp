#include "doctest.h"

#include "egt/errors.hpp"
#include "egt/generators.hpp"
#include "egt/graph.hpp"
#include "egt/oracles.hpp"
#include "egt/rng.hpp"

#include <algorithm>
#include <vector>

using namespace egt;

namespace {

Graph permuted(const Graph& g, Rng& rng) {
    std::vector<int> pi(g.n());
    for (int i = 0; i < g.n(); ++i) pi[i] = i;
    rng.shuffle(pi);
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(pi[u], pi[v]);
    return h;
}

}  // namespace

TEST_CASE("labeled copy counts on closed-form hosts") {
    CHECK(count_labeled_copies(complete_graph(3), complete_graph(5), CopyMode::Subgraph) == 60);
    CHECK(count_labeled_copies(path_graph(3), complete_graph(3), CopyMode::Subgraph) == 6);
    CHECK(count_labeled_copies(path_graph(3), complete_graph(3), CopyMode::Induced) == 0);
    CHECK(count_labeled_copies(cycle_graph(4), complete_graph(4), CopyMode::Subgraph) == 24);
    CHECK(count_labeled_copies(cycle_graph(4), complete_bipartite(2, 2).to_graph(),
                               CopyMode::Subgraph) == 8);
    CHECK(count_labeled_copies(Graph(2), complete_graph(4), CopyMode::Subgraph) == 12);
    CHECK(count_labeled_copies(Graph(2), complete_graph(4), CopyMode::Induced) == 0);
    // edges of K_n: n(n-1) labeled copies of K_2
    CHECK(count_labeled_copies(complete_graph(2), complete_graph(7), CopyMode::Subgraph) == 42);
}

TEST_CASE("counts are invariant under relabeling of pattern and host") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Graph h = random_graph(4, Rational(1, 2), 200 + trial);
        Graph g = random_graph(9, Rational(1, 2), 300 + trial);
        auto base_sub = count_labeled_copies(h, g, CopyMode::Subgraph);
        auto base_ind = count_labeled_copies(h, g, CopyMode::Induced);
        Graph h2 = permuted(h, rng), g2 = permuted(g, rng);
        CHECK(count_labeled_copies(h2, g2, CopyMode::Subgraph) == base_sub);
        CHECK(count_labeled_copies(h2, g2, CopyMode::Induced) == base_ind);
        // induced copies are a subset of subgraph copies
        CHECK(base_ind <= base_sub);
        CHECK(contains_subgraph(h, g) == (base_sub > 0));
        CHECK(contains_induced(h, g) == (base_ind > 0));
    }
}

TEST_CASE("containment spot checks") {
    CHECK(contains_subgraph(cycle_graph(5), paley(5)));
    CHECK_FALSE(contains_subgraph(complete_graph(4), cycle_graph(6)));
    CHECK(contains_induced(path_graph(4), cycle_graph(6)));
    CHECK_FALSE(contains_induced(complete_graph(3), complete_bipartite(3, 3).to_graph()));
}

TEST_CASE("graph catalog has the known number of isomorphism classes") {
    CHECK(graph_catalog(1).size() == 1);
    CHECK(graph_catalog(2).size() == 2);
    CHECK(graph_catalog(3).size() == 4);
    CHECK(graph_catalog(4).size() == 11);
    CHECK(graph_catalog(5).size() == 34);
    // pairwise non-isomorphic: no two members contain each other induced
    auto cat = graph_catalog(4);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            CHECK_FALSE(count_labeled_copies(cat[i], cat[j], CopyMode::Induced) > 0);
}

TEST_CASE("universality agrees with catalog-by-catalog containment") {
    for (int n = 2; n <= 3; ++n) {
        for (int seed = 0; seed < 4; ++seed) {
            Graph g = random_graph(14, Rational(1, 2), 700 + seed);
            bool direct = true;
            for (const Graph& h : graph_catalog(n)) direct &= contains_induced(h, g);
            CHECK(universality_check(g, n) == direct);
        }
    }
    CHECK_FALSE(universality_check(complete_graph(8), 2));  // no induced non-edge
}

TEST_CASE("max clique and max independent set are exact and dual") {
    CHECK(max_clique(complete_graph(6)).count() == 6);
    CHECK(max_clique(cycle_graph(5)).count() == 2);
    CHECK(max_clique(paley(13)).count() == 3);
    CHECK(max_independent_set(paley(13)).count() == 3);  // self-complementary
    for (int seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(18, Rational(1, 2), 800 + seed);
        Bitset q = max_clique(g);
        // returned set is actually a clique
        std::vector<int> qs = q.to_vector();
        for (std::size_t i = 0; i < qs.size(); ++i)
            for (std::size_t j = i + 1; j < qs.size(); ++j)
                CHECK(g.has_edge(qs[i], qs[j]));
        CHECK(q.count() == max_independent_set(g.complement()).count());
    }
}

TEST_CASE("search budget raises instead of truncating") {
    SearchBudget tiny{10};
    Graph g = random_graph(30, Rational(1, 2), 1);
    CHECK_THROWS_AS(count_labeled_copies(path_graph(4), g, CopyMode::Subgraph, tiny),
                    budget_error);
    CHECK_THROWS_AS(max_clique(g, tiny), budget_error);
}
