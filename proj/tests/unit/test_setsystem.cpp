#include "helpers.hpp"

#include "ultrafree/constructions.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/lp.hpp"
#include "ultrafree/setsystem.hpp"

#include <doctest.h>

using namespace ultrafree;
using testing_support::q;

namespace {

oracle::Family as_family(const SetSystem& f)
{
    oracle::Family out{f.ground_size(), {}};
    for (const auto& s : f.sets())
        out.sets.push_back(testing_support::to_mask(s));
    return out;
}

SetSystem all_subsets(std::size_t d)
{
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t m = 0; m < (std::size_t{1} << d); ++m) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < d; ++i)
            if (m >> i & 1)
                s.push_back(i);
        sets.push_back(s);
    }
    return SetSystem::from_lists(d, sets);
}

// Weak duality certificate: feasible primal and dual with equal value proves optimality.
void check_fractional(const SetSystem& f, const FractionalPair& lp)
{
    Rational tsum = 0;
    for (const auto& w : lp.transversal.weights) {
        CHECK(w >= 0);
        tsum += w;
    }
    CHECK(tsum == lp.transversal.value);
    for (const auto& s : f.sets()) {
        Rational cover = 0;
        s.for_each([&](std::size_t e) { cover += lp.transversal.weights[e]; });
        CHECK(cover >= 1);
    }
    Rational msum = 0;
    for (const auto& w : lp.matching.weights) {
        CHECK(w >= 0);
        msum += w;
    }
    CHECK(msum == lp.matching.value);
    for (std::size_t e = 0; e < f.ground_size(); ++e) {
        Rational load = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i].test(e))
                load += lp.matching.weights[i];
        CHECK(load <= 1);
    }
    CHECK(lp.transversal.value == lp.matching.value);
}

}  // namespace

TEST_SUITE("setsystem")
{
    TEST_CASE("dual and disjointness graph")
    {
        auto d = dual(SetSystem::from_lists(1, {{0}, {0}}));
        CHECK(d.ground_size() == 2);
        REQUIRE(d.size() == 1);
        CHECK(d[0].members() == std::vector<std::size_t>{0, 1});
        auto disjoint = SetSystem::from_lists(4, {{0}, {1}, {2}, {3}});
        CHECK(are_isomorphic(disjointness_graph(disjoint), complete(4)));
    }

    TEST_CASE("transversal and matching numbers")
    {
        CHECK(transversal_number(SetSystem::from_lists(2, {{0}, {1}})).size == 2);
        CHECK(transversal_number(SetSystem::from_lists(3, {{0, 1, 2}})).size == 1);
        auto b = mis_system(cycle(5));
        auto t = transversal_number(b);
        CHECK(t.size == 3);
        CHECK(is_transversal(b, t.witness));
        auto m = matching_number(b);
        CHECK(m.size == 2);
        CHECK(is_matching(b, m.witness));
        CHECK(matching_number(SetSystem::from_lists(5, {{0}, {1}, {2}})).size == 3);
        CHECK(matching_number(SetSystem::from_lists(3, {{0, 1}, {0, 1}, {0, 1}})).size == 1);
        CHECK_THROWS_AS(transversal_number(SetSystem::from_lists(2, {{0}, {}})), Infeasible);
    }

    TEST_CASE("fractional transversal")
    {
        auto b = mis_system(cycle(5));
        auto lp = fractional_transversal(b);
        CHECK(lp.transversal.value == q("5/2"));
        check_fractional(b, lp);
        CHECK(fractional_transversal(SetSystem::from_lists(4, {{0, 1, 2, 3}})).transversal.value == 1);
        CHECK(fractional_transversal(SetSystem::from_lists(2, {{0}, {1}})).transversal.value == 2);
    }

    TEST_CASE("independent simplex on the five-cycle system")
    {
        // max sum y s.t. each MIS is hit at most once, written out as a 5x5 system.
        auto b = mis_system(cycle(5));
        std::vector<std::vector<Rational>> a(b.ground_size(), std::vector<Rational>(b.size(), Rational(0)));
        for (std::size_t i = 0; i < b.size(); ++i)
            b[i].for_each([&](std::size_t e) { a[e][i] = 1; });
        auto sol = solve_lp_max(a, std::vector<Rational>(b.ground_size(), Rational(1)),
                                std::vector<Rational>(b.size(), Rational(1)));
        CHECK(sol.value == q("5/2"));
        for (const auto& y : sol.primal)
            CHECK(y == q("1/2"));
    }

    TEST_CASE("vc dimension")
    {
        for (std::size_t d = 0; d <= 4; ++d)
            CHECK(vc_dimension(all_subsets(d)).dimension == d);
        CHECK(vc_dimension(mis_system(testing_support::triangle_plus_isolated())).dimension == 2);
        auto nb = neighborhood_system(ultra_vc_example(16));
        auto vc = vc_dimension(nb);
        CHECK(vc.dimension == oracle::vc(as_family(nb)));
        CHECK(vc.dimension == 3);
    }

    TEST_CASE("helly number")
    {
        CHECK(helly_number(SetSystem::from_lists(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
        CHECK(helly_number(mis_system(cycle(5))) == 2);
        CHECK(helly_number(SetSystem::from_lists(3, {{0, 1}, {1, 2}})) == 1);
        CHECK(helly_number(SetSystem::from_lists(3, {})) == 0);
    }

    TEST_CASE("(p,q) property and fractional Helly witness")
    {
        auto disjoint = SetSystem::from_lists(3, {{0}, {1}, {2}});
        CHECK_FALSE(has_pq_property(disjoint, 3, 2));
        auto common = SetSystem::from_lists(3, {{0, 1}, {0, 2}, {0}});
        CHECK(has_pq_property(common, 3, 2));
        CHECK(has_pq_property(common, 2, 2));
        auto all = frac_helly_witness(common, 2);
        CHECK(all.alpha == 1);
        CHECK(all.beta == 1);
        auto c5 = frac_helly_witness(mis_system(cycle(5)), 2);
        CHECK(c5.alpha == q("1/2"));
        CHECK(c5.beta == q("2/5"));
        auto dj = frac_helly_witness(disjoint, 2);
        CHECK(dj.alpha == 0);
        CHECK(dj.beta == q("1/3"));
    }

    TEST_CASE("oracle agreement over the catalog up to 6 vertices")
    {
        for (const auto& g : connected_graph_catalog(6)) {
            auto b = mis_system(g);
            auto fam = as_family(b);
            // Same K_v up to the order of the ground: compare as sets of vertex masks.
            auto mis = enumerate_mis(g);
            auto expected = oracle::mis(g);
            for (std::size_t v = 0; v < g.order(); ++v) {
                std::vector<oracle::Mask> got, want;
                b[v].for_each([&](std::size_t i) { got.push_back(testing_support::to_mask(mis[i])); });
                for (auto m : expected)
                    if (m >> v & 1)
                        want.push_back(m);
                std::sort(got.begin(), got.end());
                CHECK(got == want);
            }
            CHECK(transversal_number(b).size == oracle::tau(fam));
            CHECK(matching_number(b).size == oracle::nu(fam));
            CHECK(vc_dimension(b).dimension == oracle::vc(fam));
            CHECK(helly_number(b) == oracle::helly(fam));
            auto nb = neighborhood_system(g);
            CHECK(vc_dimension(nb).dimension == oracle::vc(as_family(nb)));
            check_fractional(b, fractional_transversal(b));
        }
    }

    TEST_CASE("oracle agreement on random families")
    {
        std::uint64_t state = 12345;
        auto next = [&] {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            return state >> 33;
        };
        for (int round = 0; round < 60; ++round) {
            const std::size_t ground = 2 + next() % 7;
            const std::size_t count = 1 + next() % 8;
            std::vector<std::vector<std::size_t>> lists;
            for (std::size_t i = 0; i < count; ++i) {
                std::vector<std::size_t> s;
                for (std::size_t e = 0; e < ground; ++e)
                    if (next() % 2)
                        s.push_back(e);
                if (s.empty())
                    s.push_back(next() % ground);
                lists.push_back(s);
            }
            auto f = SetSystem::from_lists(ground, lists);
            auto fam = as_family(f);
            CHECK(transversal_number(f).size == oracle::tau(fam));
            CHECK(matching_number(f).size == oracle::nu(fam));
            CHECK(vc_dimension(f).dimension == oracle::vc(fam));
            CHECK(helly_number(f) == oracle::helly(fam));
            check_fractional(f, fractional_transversal(f));
        }
    }
}
