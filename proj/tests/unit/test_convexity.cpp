#include "helpers.hpp"

#include "ultrafree/constructions.hpp"
#include "ultrafree/convexity.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/setsystem.hpp"

#include <doctest.h>

using namespace ultrafree;
using testing_support::q;

namespace {

oracle::Space as_space(const ConvexitySpace& s)
{
    oracle::Space out{s.size(), {}};
    for (const auto& gset : s.generators().sets())
        out.generators.push_back(testing_support::to_mask(gset));
    return out;
}

}  // namespace

TEST_SUITE("convexity")
{
    TEST_CASE("mis space shapes")
    {
        auto c5 = mis_space(cycle(5));
        CHECK(c5.size() == 5);
        CHECK(c5.generators().size() == 5);
        for (const auto& gset : c5.generators().sets())
            CHECK(gset.count() == 2);
        auto kn = mis_space(complete(4));
        CHECK(kn.size() == 4);
        for (const auto& gset : kn.generators().sets())
            CHECK(gset.count() == 1);
        auto e = mis_space(empty_graph(3));
        CHECK(e.size() == 1);
        for (const auto& gset : e.generators().sets())
            CHECK(gset.count() == 1);
    }

    TEST_CASE("hulls")
    {
        auto s = mis_space(cycle(5));
        CHECK(s.hull(std::vector<std::size_t>{2}).members() == std::vector<std::size_t>{2});
        CHECK(s.hull(std::vector<std::size_t>{0, 1, 2, 3, 4}).count() == 5);
        CHECK(s.hull(std::vector<std::size_t>{}).none());
        // Two MIS sharing vertex v: their hull is the pair of MIS containing v.
        const auto& mis = s.mis();
        for (std::size_t i = 0; i < mis.size(); ++i)
            for (std::size_t j = i + 1; j < mis.size(); ++j) {
                std::vector<Vertex> common;
                std::set_intersection(mis[i].begin(), mis[i].end(), mis[j].begin(), mis[j].end(),
                                      std::back_inserter(common));
                if (common.size() != 1)
                    continue;
                auto h = s.hull(std::vector<std::size_t>{i, j});
                CHECK(h.members() == std::vector<std::size_t>{i, j});
            }
        for (const auto& c : s.convex_sets())
            CHECK(s.is_convex(c));
    }

    TEST_CASE("radon partitions")
    {
        auto s = mis_space(cycle(5));
        CHECK_FALSE(radon_partition(s, {0, 1}));
        auto line = ConvexitySpace::subcubes(1);
        CHECK_FALSE(radon_partition(line, {0, 1}));
        auto square = ConvexitySpace::subcubes(2);
        // Points are binary words with coordinate i at bit i: 00 = 0, 10 = 1, 01 = 2.
        auto p = radon_partition(square, {0, 1, 2});
        REQUIRE(p);
        auto h1 = square.hull(p->first);
        auto h2 = square.hull(p->second);
        CHECK(h1.intersects(h2));
    }

    TEST_CASE("subcube spaces against the oracle")
    {
        for (std::size_t n = 1; n <= 3; ++n) {
            auto s = ConvexitySpace::subcubes(n);
            auto o = as_space(s);
            CHECK(radon_number(s, s.size() + 1) == oracle::radon(o));
            CHECK(space_helly_number(s) == oracle::space_helly(o));
            CHECK(space_helly_number(s) == 2);
            auto closure = SetSystem(s.size(), s.convex_sets(), {});
            std::vector<Bitset> nonempty;
            for (const auto& c : closure.sets())
                if (c.any())
                    nonempty.push_back(c);
            CHECK(helly_number(SetSystem(s.size(), nonempty, {})) == 2);
        }
        CHECK(radon_number(ConvexitySpace::subcubes(1), 3) == 3);
        CHECK(radon_number(ConvexitySpace::subcubes(3), 9) == 4);
    }

    TEST_CASE("radon cap handling")
    {
        auto s = ConvexitySpace::subcubes(3);
        CHECK(radon_number(s, 3) == std::nullopt);
        CHECK_THROWS_AS(radon_number(s, 10), PreconditionViolated);
    }

    TEST_CASE("space helly of the three pairs")
    {
        auto s = ConvexitySpace::explicit_space(SetSystem::from_lists(3, {{0, 1}, {1, 2}, {0, 2}}));
        CHECK(space_helly_number(s) == 3);
    }

    TEST_CASE("graph spaces against the oracle")
    {
        for (const auto& g : connected_graph_catalog(6)) {
            auto s = mis_space(g);
            auto o = as_space(s);
            if (s.size() > 12)
                continue;
            CHECK(radon_number(s, s.size() + 1) == oracle::radon(o));
            if (g.edge_count() > 0)
                CHECK(space_helly_number(s) == 2);
            CHECK(space_helly_number(s) == oracle::space_helly(o));
        }
        auto c5 = mis_space(cycle(5));
        CHECK(radon_number(c5, 6) == 3);
    }

    TEST_CASE("weak eps nets")
    {
        auto s = mis_space(cycle(5));
        auto mu = Measure::uniform(5);
        CHECK(weak_eps_net(s, mu, q("3/2")).empty());
        CHECK(weak_eps_net(s, mu, q("1")).size() == 1);
        CHECK(weak_eps_net(s, mu, q("1/2")).size() == 1);
        auto small = weak_eps_net(s, mu, q("1/5"));
        for (const auto& c : s.convex_sets()) {
            if (mu.of(c) < q("1/5"))
                continue;
            bool hit = false;
            for (auto p : small)
                hit = hit || c.test(p);
            CHECK(hit);
        }
        CHECK_THROWS_AS(weak_eps_net(s, mu, q("0")), PreconditionViolated);
        CHECK_THROWS_AS((Measure{{q("1/2"), q("1/3"), 0, 0, 0}}.validate(5)), PreconditionViolated);
    }

    TEST_CASE("table correspondence report")
    {
        CHECK(verify_table1(cycle(5), 3).all_pass());
        CHECK(verify_table1(petersen(), 3).all_pass());
        auto k4 = verify_table1(complete(4), 4);
        bool seen = false;
        for (const auto& c : k4.checks)
            if (c.name == "kr_free_iff_r2_property") {
                seen = true;
                CHECK(c.status == CheckStatus::pass);
                CHECK(c.value["r2_property"] == false);
                CHECK(c.value["kr_free"] == false);
            }
        CHECK(seen);
    }
}
