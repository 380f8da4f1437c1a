#include "helpers.hpp"

#include "ultrafree/constructions.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/ultra.hpp"

#include <doctest.h>

using namespace ultrafree;
using testing_support::q;

namespace {

Graph disjoint_edges(std::size_t t)
{
    Graph g(2 * t);
    for (std::size_t i = 0; i < t; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

}  // namespace

TEST_SUITE("ultra")
{
    TEST_CASE("ultra parameter")
    {
        CHECK(ultra_parameter(complete(4), 5).infinite());
        auto c5 = ultra_parameter(cycle(5), 3);
        REQUIRE_FALSE(c5.infinite());
        CHECK(*c5.epsilon_star == q("1/5"));
        CHECK(c5.admits(q("1/5")));
        CHECK_FALSE(c5.admits(q("1/4")));
        CHECK_FALSE(c5.admits(q("0")));
        CHECK(*ultra_parameter(hypercube_lb(3).g, 3).epsilon_star == q("1/28"));
        CHECK(*ultra_parameter(complete_bipartite(1, 3), 3).epsilon_star == q("1/4"));
        CHECK_THROWS_AS(ultra_parameter(complete(3), 3), NotKrFree);
        CHECK_THROWS_AS(ultra_parameter(cycle(5), 2), PreconditionViolated);
    }

    TEST_CASE("ultra parameter against the oracle")
    {
        for (const auto& g : connected_graph_catalog(6))
            for (std::size_t r = 3; r <= 5; ++r) {
                if (!is_kr_free(g, r))
                    continue;
                auto cert = ultra_parameter(g, r);
                auto expected = oracle::ultra(g, r);
                CHECK(cert.epsilon_star == expected);
            }
    }

    TEST_CASE("blow-ups of ultra graphs stay ultra")
    {
        for (std::size_t s = 1; s <= 4; ++s) {
            auto b = blowup(cycle(5), std::vector<std::size_t>(5, s));
            auto cert = ultra_parameter(b.graph, 3);
            REQUIRE_FALSE(cert.infinite());
            CHECK(*cert.epsilon_star > 0);
        }
    }

    TEST_CASE("half graphs")
    {
        for (std::size_t k = 1; k <= 5; ++k) {
            auto h = find_half_graph(half_min(k), k);
            REQUIRE(h);
            CHECK(is_valid_half_graph(half_min(k), *h));
        }
        for (std::size_t t = 2; t <= 5; ++t)
            CHECK(find_half_graph(mtt(t), t));
        CHECK_FALSE(find_half_graph(cycle(5), 6));
        auto h2 = hypercube_lb(2).g;
        auto eps = *ultra_parameter(h2, 3).epsilon_star;
        auto k = static_cast<std::size_t>(ceil(Rational(1) / eps)) + 1;
        CHECK_FALSE(find_half_graph(h2, k));
        CHECK_THROWS_AS(find_half_graph(cycle(5), 0), PreconditionViolated);
    }

    TEST_CASE("half graph search against the oracle")
    {
        for (const auto& g : connected_graph_catalog(6))
            for (std::size_t k = 1; k <= 3; ++k) {
                auto h = find_half_graph(g, k);
                CHECK(h.has_value() == oracle::has_half_graph(g, k));
                if (h)
                    CHECK(is_valid_half_graph(g, *h));
            }
    }

    TEST_CASE("bipartite induced matching number")
    {
        for (std::size_t t = 1; t <= 4; ++t)
            CHECK(nu_bi(disjoint_edges(t)).size == t);
        CHECK(nu_bi(cycle(5)).size == 2);
        CHECK(is_valid_bi_induced_matching(cycle(5), BiInducedMatching{{{1, 2}, {4, 3}}}));
        CHECK(nu_bi(testing_support::triangle_plus_isolated()).size == 1);
        for (const auto& g : connected_graph_catalog(6)) {
            auto nb = nu_bi(g);
            CHECK(nb.size == oracle::nu_bi(g));
            CHECK(is_valid_bi_induced_matching(g, nb.witness));
        }
    }

    TEST_CASE("matching to half graph")
    {
        auto lb = hypercube_lb(6, 16);
        BiInducedMatching m;
        const std::uint64_t top = 63;
        for (std::uint64_t u = 0; u <= top; u += 2)
            m.pairs.emplace_back(lb.g_q_vertex(u), lb.g_q_vertex(top ^ u));
        REQUIRE(is_valid_bi_induced_matching(lb.g, m));
        auto eps = *ultra_parameter(lb.g, 3).epsilon_star;
        CHECK(eps == q("1/16"));
        auto h = build_half_from_matching(lb.g, m, 3, eps);
        CHECK(is_valid_half_graph(lb.g, h));
        CHECK(h.xs.size() >= build_half_guarantee(m.pairs.size(), eps));
        CHECK(build_half_guarantee(32, eps) == 1);
        CHECK(build_half_guarantee(1024, q("1")) == 10);
    }

    TEST_CASE("matching to half graph on non-ultra input")
    {
        auto g = disjoint_edges(4);
        BiInducedMatching m{{{0, 1}, {2, 3}, {4, 5}, {6, 7}}};
        CHECK_THROWS_AS(build_half_from_matching(g, m, 3, q("1")), PreconditionViolated);
        CHECK_THROWS_AS(build_half_from_matching(g, m, 3, q("1"), BuildHalfOptions{false}), InternalContradiction);
        CHECK_THROWS_AS(build_half_from_matching(g, BiInducedMatching{{{0, 1}, {1, 2}}}, 3, q("1")),
                        PreconditionViolated);
    }

    TEST_CASE("vc clique bound")
    {
        auto c5 = check_vc_clique_bound(cycle(5), 3, q("1/5"));
        CHECK(c5.all_pass());
        CHECK(c5.checks.at(0).value["vc"] == 2);
        CHECK(c5.checks.at(0).value["bound"] == "5");
        auto h2 = hypercube_lb(2).g;
        CHECK(check_vc_clique_bound(h2, 3, *ultra_parameter(h2, 3).epsilon_star).all_pass());
        CHECK_THROWS_AS(check_vc_clique_bound(complete_bipartite(1, 3), 3, q("1/2")), PreconditionViolated);
    }
}
