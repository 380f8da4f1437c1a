// Exit gate: prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include "oracles.hpp"

#include "ultrafree/blowup.hpp"
#include "ultrafree/constructions.hpp"
#include "ultrafree/convexity.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/setsystem.hpp"
#include "ultrafree/suites.hpp"
#include "ultrafree/ultra.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ultrafree;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (!ok)
                detail << "; ";
            else
                detail.str("");
            ok = false;
            detail << what;
        }
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string failures(const Report& r, std::size_t limit = 3)
{
    std::ostringstream out;
    std::size_t shown = 0;
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::fail && shown++ < limit)
            out << (shown > 1 ? ", " : "") << c.name;
    return out.str();
}

std::vector<Graph> catalog_graphs(CatalogKind kind = CatalogKind::small)
{
    std::vector<Graph> out;
    for (auto& e : graph_catalog(kind))
        out.push_back(std::move(e.graph));
    return out;
}

Outcome table1()
{
    Outcome o;
    const auto t0 = Clock::now();
    SuiteOptions so;
    so.suite = "table1";
    Report r = run_suite(so);
    const double secs = seconds_since(t0);
    o.expect(r.count(CheckStatus::fail) == 0, "failing checks: " + failures(r));
    o.expect(secs < 300, "runtime " + std::to_string(secs) + " s");
    // Independent recount of chi = tau and omega = nu with the brute-force oracles.
    std::size_t graphs = 0;
    for (const auto& g : catalog_graphs()) {
        auto fam = oracle::mis_family(g);
        o.expect(oracle::chi(g) == oracle::tau(fam), "oracle chi != tau");
        o.expect(oracle::omega(g) == oracle::nu(fam), "oracle omega != nu");
        ++graphs;
    }
    if (o.ok)
        o.detail << graphs << " graphs, " << r.checks.size() << " checks, " << r.count(CheckStatus::skipped)
                 << " skipped (edgeless), " << secs << " s";
    return o;
}

Outcome lp_duality()
{
    Outcome o;
    std::size_t n = 0;
    for (const auto& g : catalog_graphs()) {
        auto b = mis_system(g);
        auto lp = fractional_transversal(b);
        o.expect(lp.transversal.value == lp.matching.value, "nu* != tau*");
        auto nu = matching_number(b).size;
        auto tau = transversal_number(b).size;
        o.expect(Rational(BigInt(nu)) <= lp.matching.value && lp.transversal.value <= Rational(BigInt(tau)),
                 "nu <= nu* = tau* <= tau violated");
        ++n;
    }
    auto c5 = fractional_transversal(mis_system(cycle(5))).transversal.value;
    o.expect(c5 == Rational(5, 2), "tau*(B(C5)) = " + to_string(c5));
    if (o.ok)
        o.detail << n << " graphs, tau*(B(C5)) = " << to_string(c5);
    return o;
}

Outcome subcubes()
{
    Outcome o;
    std::ostringstream got;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto s = ConvexitySpace::subcubes(n);
        const std::size_t formula = static_cast<std::size_t>(std::floor(std::log2(double(n + 1)))) + 1;
        auto radon = radon_number(s, s.size() + 1);
        auto helly = space_helly_number(s);
        auto independent = radon_independence(s);
        got << (n > 1 ? ", " : "") << "n=" << n << ": radon " << (radon ? std::to_string(*radon) : "none")
            << " (expected " << formula << ", largest Radon-free set " << independent << "), helly " << helly;
        o.expect(radon && *radon == formula, "radon mismatch at n=" + std::to_string(n));
        o.expect(helly == 2, "helly mismatch at n=" + std::to_string(n));
    }
    o.detail.str("");
    o.detail << got.str();
    return o;
}

Outcome vc_matching()
{
    Outcome o;
    auto graphs = catalog_graphs();
    for (auto& g : random_graphs(200, 2, 10, default_catalog_seed + 4))
        graphs.push_back(std::move(g));
    std::size_t primal = 0, dual_cases = 0;
    for (const auto& g : graphs) {
        auto b = mis_system(g);
        auto nb = nu_bi(g).size;
        auto vb = vc_dimension(b).dimension;
        auto vm = vc_dimension(dual(b)).dimension;
        if (vb >= 3) {
            ++primal;
            o.expect(vb <= nb, "dim_VC(B) = " + std::to_string(vb) + " > nu_bi = " + std::to_string(nb));
        }
        if (vm >= 1) {
            ++dual_cases;
            o.expect(vm <= nb, "dim_VC(M) = " + std::to_string(vm) + " > nu_bi = " + std::to_string(nb));
        }
    }
    if (o.ok)
        o.detail << graphs.size() << " graphs, " << primal << " with dim_VC(B) >= 3, " << dual_cases
                 << " with dim_VC(M) >= 1";
    return o;
}

Outcome no_half_graph()
{
    Outcome o;
    std::vector<std::pair<std::string, Graph>> inputs{{"C5", cycle(5)}, {"hypercube_lb2", hypercube_lb(2).g}};
    for (std::size_t s = 1; 5 * s <= 40; ++s)
        inputs.emplace_back("C5[" + std::to_string(s) + "]", blowup(cycle(5), std::vector<std::size_t>(5, s)).graph);
    for (const auto& [name, g] : inputs) {
        auto cert = ultra_parameter(g, 3);
        o.expect(!cert.infinite() && *cert.epsilon_star > 0, name + " is not ultra");
        if (cert.infinite())
            continue;
        auto k = static_cast<std::size_t>(ceil(Rational(1) / *cert.epsilon_star)) + 1;
        auto h = find_half_graph(g, k);
        o.expect(!h, name + " contains a half graph of order " + std::to_string(k));
    }
    if (o.ok)
        o.detail << inputs.size() << " instances, largest n = 40";
    return o;
}

Outcome construction_d3()
{
    Outcome o;
    const auto t0 = Clock::now();
    auto lb = hypercube_lb(3);
    o.expect(lb.g.order() == 56, "|G| = " + std::to_string(lb.g.order()));
    auto codeg = codegree_min(lb.g, 2);
    o.expect(codeg && *codeg >= 2, "min codegree below 2");
    o.expect(is_kr_free(lb.g, 3), "G has a triangle");
    o.expect(is_maximal_kr_free(lb.g, 3), "G not maximal triangle-free");
    auto tq = twin_quotient(lb.g);
    o.expect(tq.quotient.order() == 14 && are_isomorphic(tq.quotient, lb.h), "twin quotient is not H");
    auto core = p4_obstruction(lb.g);
    o.expect(core.core.size() >= 4 && is_valid_obstruction(lb.g, core), "p4 core too small");
    const double secs = seconds_since(t0);
    o.expect(secs < 120, "runtime " + std::to_string(secs) + " s");
    if (o.ok)
        o.detail << "|G| = 56, min codegree " << *codeg << ", quotient 14, p4 core " << core.core.size() << ", "
                 << secs << " s";
    return o;
}

Outcome bounded_vc()
{
    Outcome o;
    Graph g = gamma_blowup(complete_bipartite(2, 2), 1, 2);
    auto nb = neighborhood_system(g);
    auto vc = vc_dimension(nb).dimension;
    oracle::Family fam{g.order(), oracle::adjacency(g)};
    auto brute = oracle::vc(fam);
    o.expect(g.order() == 16, "n = " + std::to_string(g.order()));
    o.expect(vc <= 3, "dim_VC = " + std::to_string(vc));
    o.expect(vc == brute, "search and brute force disagree");
    o.expect(vc == 3, "regression value changed: " + std::to_string(vc));
    auto core = p4_obstruction(g);
    o.expect(core.core.size() >= 4 && is_valid_obstruction(g, core), "p4 core below n/4");
    if (o.ok)
        o.detail << "dim_VC = " << vc << " (brute force " << brute << "), p4 core " << core.core.size();
    return o;
}

Outcome haussler()
{
    Outcome o;
    std::vector<std::pair<std::string, Graph>> inputs{{"hypercube_lb2", hypercube_lb(2).g}};
    for (std::size_t s = 2; s <= 5; ++s)
        inputs.emplace_back("C5[" + std::to_string(s) + "]", blowup(cycle(5), std::vector<std::size_t>(5, s)).graph);
    inputs.emplace_back("P3[1,1]", gamma_blowup(path(3), 1, 1));
    inputs.emplace_back("C5[1,1]", gamma_blowup(cycle(5), 1, 1));
    inputs.emplace_back("K22[1,2]", gamma_blowup(complete_bipartite(2, 2), 1, 2));
    inputs.emplace_back("K33[1,2]", ultra_vc_example(24));
    std::size_t checks = 0;
    for (const auto& [name, g] : inputs) {
        auto cert = ultra_parameter(g, 3);
        if (cert.infinite() || *cert.epsilon_star == 0) {
            o.expect(false, name + " is not ultra");
            continue;
        }
        try {
            auto h = haussler_partition(g, 3, *cert.epsilon_star);
            o.expect(h.report.all_pass(), name + ": " + failures(h.report));
            o.expect(verify_hom(g, h.decomposition.quotient, h.decomposition.origin), name + ": hom fails");
            o.expect(is_maximal_kr_free(h.decomposition.quotient, 3), name + ": quotient not maximal");
            checks += h.report.checks.size();
        } catch (const Error& e) {
            o.expect(false, name + ": " + e.what());
        }
    }
    if (o.ok)
        o.detail << inputs.size() << " instances, " << checks << " claim checks, packing inequality included";
    return o;
}

Outcome mindeg_and_codeg()
{
    Outcome o;
    SuiteOptions so;
    so.suite = "mindeg-ultra";
    Report m = run_suite(so);
    so.suite = "codeg-edge";
    Report c = run_suite(so);
    o.expect(m.all_pass() && m.count(CheckStatus::pass) > 0, "mindeg-ultra: " + failures(m));
    o.expect(c.all_pass() && c.count(CheckStatus::pass) > 0, "codeg-edge: " + failures(c));
    if (o.ok)
        o.detail << m.checks.size() << " Turan checks, " << c.checks.size() << " catalog checks";
    return o;
}

Outcome chromatic()
{
    Outcome o;
    SuiteOptions so;
    so.suite = "vc-chromatic";
    Report r = run_suite(so);
    std::size_t stated = 0;
    for (const auto& c : r.checks) {
        if (c.name.ends_with("/colors_within_stated_bound"))
            ++stated;
    }
    o.expect(r.all_pass(), failures(r));
    o.expect(stated > 0, "no instance satisfied the degree hypothesis");
    if (o.ok)
        o.detail << stated << " (graph, c) instances, " << r.checks.size() << " checks";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"table1 correspondence on the connected catalog", table1},
        {"LP duality nu* = tau*", lp_duality},
        {"subcube Radon and Helly numbers", subcubes},
        {"VC-dimension vs bipartite induced matchings", vc_matching},
        {"no half graph in ultra instances", no_half_graph},
        {"hypercube construction d = 3", construction_d3},
        {"bounded VC-dimension example", bounded_vc},
        {"blow-up decomposition pipeline", haussler},
        {"min-degree to ultra and codegree to edge density", mindeg_and_codeg},
        {"VC chromatic partition", chromatic},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail.str(std::string("exception: ") + e.what());
        }
        if (!o.ok)
            ++failed;
        std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << "  [" << o.detail.str() << "]" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
