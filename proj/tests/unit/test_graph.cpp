#include "helpers.hpp"

#include "ultrafree/constructions.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"

#include <doctest.h>

using namespace ultrafree;
using testing_support::q;

TEST_SUITE("graph")
{
    TEST_CASE("graph construction")
    {
        Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
        CHECK(g.edge_count() == 2);
        CHECK(g.adjacent(1, 0));
        CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), PreconditionViolated);
        CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), PreconditionViolated);
        CHECK(cycle(5).complement().edge_count() == 5);
    }

    TEST_CASE("count_cliques")
    {
        CHECK(count_cliques(complete(4), 3) == 4);
        CHECK(count_cliques(cycle(5), 2) == 5);
        CHECK(count_cliques(turan(9, 3), 3) == 27);
        CHECK(count_cliques(cycle(5), 1) == 5);
        CHECK_THROWS_AS(count_cliques(cycle(5), 0), PreconditionViolated);
        CHECK(count_cliques(complete(4), 2, Bitset(4)) == 0);
    }

    TEST_CASE("chromatic and clique numbers")
    {
        CHECK(chromatic_number(cycle(5)) == 3);
        CHECK(chromatic_number(turan(9, 3)) == 3);
        CHECK(chromatic_number(petersen()) == 3);
        CHECK(clique_number(complete(5)) == 5);
        CHECK(clique_number(cycle(5)) == 2);
        CHECK(clique_number(turan(9, 3)) == 3);
        CHECK(chromatic_number(empty_graph(0)) == 0);
    }

    TEST_CASE("maximal independent sets")
    {
        auto c5 = enumerate_mis(cycle(5));
        REQUIRE(c5.size() == 5);
        for (const auto& s : c5) {
            REQUIRE(s.size() == 2);
            CHECK((s[1] - s[0] == 2 || s[1] - s[0] == 3));
        }
        CHECK(enumerate_mis(complete(6)).size() == 6);
        CHECK(enumerate_mis(petersen()).size() == oracle::mis(petersen()).size());
        CHECK(enumerate_mis(petersen()).size() == 15);
    }

    TEST_CASE("codegree and codensity")
    {
        CHECK(codegree_min(cycle(5), 1) == 2);
        CHECK(codegree_min(cycle(5), 2) == 1);
        CHECK(codegree_min(complete(4), 2) == std::nullopt);
        CHECK(clique_codensity(turan(6, 3), 2, 2) == q("2/3"));
        CHECK(clique_codensity(cycle(5), 2, 2) == q("0"));
        Graph kminus = complete(6);
        kminus.remove_edge(0, 1);
        CHECK(clique_codensity(kminus, 2, 2) == q("1"));
    }

    TEST_CASE("pi_density")
    {
        CHECK(pi_density(2, 4) == q("2/3"));
        CHECK(pi_density(2, 3) == q("1/2"));
        CHECK(pi_density(3, 5) == q("3/8"));
    }

    TEST_CASE("induced P4 links")
    {
        auto link = has_induced_p4(path(4), 0, 3);
        REQUIRE(link);
        CHECK(link->y == 1);
        CHECK(link->z == 2);
        Graph gamma = gamma_blowup(path(3), 1, 1);
        auto l = has_induced_p4(gamma, 0, 1);
        REQUIRE(l);
        CHECK(is_induced_p4(gamma, 0, l->y, l->z, 1));
        CHECK(is_induced_p4(gamma, 0, 6, 3, 1));
        Graph c4 = cycle(4);
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = 0; v < 4; ++v)
                if (u != v)
                    CHECK_FALSE(has_induced_p4(c4, u, v));
    }

    TEST_CASE("isomorphism and canonical codes")
    {
        Graph a = cycle(5);
        Graph b = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
        auto phi = find_isomorphism(a, b);
        REQUIRE(phi);
        for (auto [u, v] : a.edges())
            CHECK(b.adjacent((*phi)[u], (*phi)[v]));
        CHECK(canonical_code(a) == canonical_code(b));
        CHECK_FALSE(are_isomorphic(cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    }

    TEST_CASE("oracle agreement on the connected catalog up to 6 vertices")
    {
        for (const auto& g : connected_graph_catalog(6)) {
            auto adj = oracle::adjacency(g);
            CHECK(count_cliques(g, 2) == g.edge_count());
            CHECK(chromatic_number(g) == oracle::chi(g));
            CHECK(clique_number(g) == oracle::omega(g));
            CHECK(count_cliques(g, 3) == oracle::count_cliques(g, 3, oracle::full(g.order())));
            auto sets = enumerate_mis(g);
            auto expected = oracle::mis(g);
            REQUIRE(sets.size() == expected.size());
            std::vector<oracle::Mask> got;
            for (const auto& s : sets) {
                CHECK(is_independent(g, s));
                got.push_back(testing_support::to_mask(s));
            }
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
            auto col = optimal_coloring(g);
            for (auto [u, v] : g.edges())
                CHECK(col[u] != col[v]);
            CHECK(is_clique(g, max_clique(g)));
        }
    }

    TEST_CASE("budget exhaustion")
    {
        SearchBudget tiny;
        tiny.max_nodes = 2;
        CHECK_THROWS_AS(enumerate_mis(petersen(), tiny), BudgetExceeded);
        CHECK_THROWS_AS(chromatic_number(petersen(), tiny), BudgetExceeded);
    }
}
