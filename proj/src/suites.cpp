#include "ultrafree/suites.hpp"

#include "ultrafree/blowup.hpp"
#include "ultrafree/constructions.hpp"
#include "ultrafree/convexity.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/setsystem.hpp"
#include "ultrafree/ultra.hpp"

#include <algorithm>

namespace ultrafree {

std::vector<CatalogEntry> graph_catalog(CatalogKind kind, std::uint64_t seed)
{
    std::vector<CatalogEntry> out;
    std::vector<std::size_t> per_order(8, 0);
    for (auto& g : connected_graph_catalog(7)) {
        std::size_t n = g.order();
        out.push_back({"c" + std::to_string(n) + "_" + std::to_string(per_order[n]++), std::move(g)});
    }
    if (kind == CatalogKind::extended) {
        auto extra = random_graphs(100, 8, 12, seed);
        for (std::size_t i = 0; i < extra.size(); ++i)
            out.push_back({"r" + std::to_string(i), std::move(extra[i])});
    }
    return out;
}

std::vector<std::string> suite_names()
{
    return {"table1", "halfgraph", "construction:d=D", "mindeg-ultra", "codeg-edge", "vc-chromatic"};
}

namespace {

bool lp_solutions_feasible(const SetSystem& b, const FractionalPair& lp)
{
    for (const auto& w : lp.transversal.weights)
        if (w < 0 || w > 1)
            return false;
    for (const auto& w : lp.matching.weights)
        if (w < 0 || w > 1)
            return false;
    for (std::size_t i = 0; i < b.size(); ++i) {
        Rational cover = 0;
        b[i].for_each([&](std::size_t e) { cover += lp.transversal.weights[e]; });
        if (cover < 1)
            return false;
    }
    for (std::size_t e = 0; e < b.ground_size(); ++e) {
        Rational load = 0;
        b.containing(e).for_each([&](std::size_t i) { load += lp.matching.weights[i]; });
        if (load > 1)
            return false;
    }
    return true;
}

Report table1_suite(const SuiteOptions& o)
{
    Report report;
    for (const auto& [id, g] : graph_catalog(o.catalog, o.seed)) {
        Report one = verify_table1(g, 3, o.budget);
        const SetSystem b = mis_system(g, o.budget);
        for (std::size_t r : {4, 5}) {
            bool kr_free = is_kr_free(g, r);
            bool pq = has_pq_property(b, r, 2);
            one.add("kr_free_iff_r2_property_r" + std::to_string(r), kr_free == pq,
                    {{"r", r}, {"kr_free", kr_free}, {"r2_property", pq}}, nullptr,
                    "G is K_r-free iff B(G) has the (r,2)-property");
        }
        auto lp = fractional_transversal(b);
        auto nu = matching_number(b, o.budget).size;
        auto tau = transversal_number(b, o.budget).size;
        bool chain = Rational(BigInt(nu)) <= lp.matching.value && lp.transversal.value <= Rational(BigInt(tau));
        one.add("lp_duality", lp.matching.value == lp.transversal.value && lp_solutions_feasible(b, lp) && chain,
                {{"nu", nu},
                 {"nu_star", to_string(lp.matching.value)},
                 {"tau_star", to_string(lp.transversal.value)},
                 {"tau", tau}},
                nullptr, "nu <= nu* = tau* <= tau");
        report.merge(one, id + "/");
    }
    return report;
}

// Graphs that are eps-ultra maximal triangle-free for some eps > 0.
std::vector<CatalogEntry> ultra_instances()
{
    std::vector<CatalogEntry> out{{"C5", cycle(5)}, {"hypercube_lb2", hypercube_lb(2).g}};
    for (std::size_t s = 2; s <= 8; ++s)
        out.push_back({"C5_blowup_" + std::to_string(s), blowup(cycle(5), std::vector<std::size_t>(5, s)).graph});
    return out;
}

Report halfgraph_suite(const SuiteOptions& o)
{
    Report report;
    auto instances = ultra_instances();
    for (auto& e : graph_catalog(o.catalog, o.seed))
        if (is_maximal_kr_free(e.graph, 3) && e.graph.order() >= 3)
            instances.push_back(std::move(e));

    for (const auto& [id, g] : instances) {
        auto cert = ultra_parameter(g, 3);
        if (cert.infinite() || *cert.epsilon_star == 0) {
            report.skip(id + "/no_half_graph", "not eps-ultra for any eps > 0");
            continue;
        }
        const Rational eps = *cert.epsilon_star;
        const BigInt k = ceil(Rational(1) / eps) + 1;
        auto found = find_half_graph(g, static_cast<std::size_t>(k), o.budget);
        nlohmann::json witness = nullptr;
        if (found)
            witness = {{"xs", found->xs}, {"ys", found->ys}};
        report.add(id + "/no_half_graph", !found, {{"epsilon_star", to_string(eps)}, {"k", k.str()}}, witness,
                   "an eps-ultra maximal K_r-free graph has no half graph of order 1/eps + 1");

        // nu_bi <= (2/eps)^{2/eps}; the floor of the exponent keeps the comparison exact.
        if (eps >= Rational(1, 3)) {
            const Rational x = Rational(2) / eps;
            const Rational bound = pow(x, static_cast<unsigned>(floor(x)));
            auto nb = nu_bi(g, o.budget);
            report.add(id + "/bounded_induced_matching", Rational(BigInt(nb.size)) <= bound,
                       {{"nu_bi", nb.size}, {"bound", to_string(bound)}}, nullptr,
                       "nu_bi(G) <= (2/eps)^{2/eps}");
        }
    }

    for (std::size_t k = 1; k <= 5; ++k) {
        auto h = find_half_graph(half_min(k), k, o.budget);
        report.add("half_min_" + std::to_string(k) + "/contains_itself", h.has_value(), nullptr, nullptr,
                   "the minimal half graph contains a member of H_k");
    }
    for (std::size_t t = 2; t <= 5; ++t) {
        auto h = find_half_graph(mtt(t), t, o.budget);
        report.add("mtt_" + std::to_string(t) + "/contains_half_graph", h.has_value(), nullptr, nullptr,
                   "M_{t,t} lies in H_t");
    }

    // The D-classes of the d = 6 hypercube construction with 16 copies give eps* = 1/16, and the
    // antipodal pairs with first coordinate 0 form a bipartite induced matching of size 32.
    auto lb = hypercube_lb(6, 16);
    BiInducedMatching m;
    const std::uint64_t top = (std::uint64_t{1} << 6) - 1;
    for (std::uint64_t u = 0; u <= top; u += 2)
        m.pairs.emplace_back(lb.g_q_vertex(u), lb.g_q_vertex(top ^ u));
    const Rational eps = *ultra_parameter(lb.g, 3).epsilon_star;
    auto h = build_half_from_matching(lb.g, m, 3, eps);
    const std::size_t guaranteed = build_half_guarantee(m.pairs.size(), eps);
    report.add("hypercube_lb6/build_half", is_valid_half_graph(lb.g, h) && h.xs.size() >= guaranteed,
               {{"k", h.xs.size()}, {"guaranteed", guaranteed}, {"t", m.pairs.size()}, {"eps", to_string(eps)}},
               {{"xs", h.xs}, {"ys", h.ys}}, "a bipartite induced matching of size t yields H_k, k >= log t / log(2/eps)");
    return report;
}

Report construction_suite(std::size_t d, const SuiteOptions& o)
{
    Report report;
    const std::string p = "hypercube_lb" + std::to_string(d) + "/";
    auto lb = hypercube_lb(d);
    const std::size_t cube = std::size_t{1} << d;
    report.add(p + "order", lb.g.order() == (2 * d + 1) * cube,
               {{"order", lb.g.order()}, {"expected", (2 * d + 1) * cube}}, nullptr, "|G| = (2d+1) 2^d");
    report.add(p + "h_maximal_triangle_free", is_maximal_kr_free(lb.h, 3), nullptr, nullptr,
               "H is maximal triangle-free");
    report.add(p + "g_maximal_triangle_free", is_maximal_kr_free(lb.g, 3), nullptr, nullptr,
               "G is maximal triangle-free");
    auto codeg = codegree_min(lb.g, 2);
    const std::size_t need = d >= 2 ? std::size_t{1} << (d - 2) : 1;
    report.add(p + "codegree", codeg && *codeg >= need, {{"min_codegree", codeg ? *codeg : 0}, {"required", need}},
               nullptr, "|N(u,v)| >= 2^{d-2} for non-adjacent u, v");
    auto tq = twin_quotient(lb.g);
    report.add(p + "twin_quotient_is_h", tq.quotient.order() == 2 * d + cube && are_isomorphic(tq.quotient, lb.h),
               {{"quotient_order", tq.quotient.order()}}, nullptr, "the twin quotient of G is H");
    auto core = p4_obstruction(lb.g, o.budget);
    report.add(p + "p4_core", core.core.size() >= cube / 2 && is_valid_obstruction(lb.g, core),
               {{"core", core.core.size()}, {"required", cube / 2}}, core.core,
               "2^{d-1} vertices pairwise joined by induced P4s");
    auto cert = ultra_parameter(lb.g, 3);
    report.add(p + "ultra", !cert.infinite() && *cert.epsilon_star > 0,
               {{"epsilon_star", cert.infinite() ? std::string("infinite") : to_string(*cert.epsilon_star)}}, nullptr,
               "G is ultra maximal triangle-free");
    return report;
}

Report mindeg_suite(const SuiteOptions&)
{
    Report report;
    for (std::size_t r : {3, 4, 5}) {
        const Rational ratio(BigInt(2 * r - 5), BigInt(2 * r - 3));
        for (std::size_t n = r - 1; n <= 30; ++n) {
            Graph g = turan(n, r - 1);
            const Rational slack = Rational(BigInt(g.min_degree()), BigInt(n)) - ratio;
            if (slack <= 0)
                continue;
            for (const Rational& eps : std::vector<Rational>{slack, slack / 2}) {
                Report one = min_degree_ultra_check(g, r, eps);
                report.merge(one, "T" + std::to_string(n) + "_" + std::to_string(r - 1) + "/r" + std::to_string(r) +
                                      "/eps=" + to_string(eps) + "/");
            }
        }
    }
    report.merge(min_degree_ultra_check(cycle(5), 3, Rational(1, 15)), "C5/r3/eps=1/15/");
    return report;
}

Report codeg_suite(const SuiteOptions& o)
{
    Report report;
    for (const auto& [id, g] : graph_catalog(o.catalog, o.seed)) {
        auto codeg = codegree_min(g, 2);
        if (!codeg || *codeg == 0)
            continue;
        const Rational c(BigInt(*codeg), BigInt(g.order()));
        const Rational bound = Rational(2) - Rational(1) / c;
        const Rational density = *clique_codensity(g, 2, 2);
        report.add(id + "/codeg_edge", density >= bound,
                   {{"c", to_string(c)}, {"codensity", to_string(density)}, {"bound", to_string(bound)}}, nullptr,
                   "codegree >= c n implies co-neighbourhood edge density >= 2 - 1/c");
    }
    return report;
}

Report vc_chromatic_suite(const SuiteOptions& o)
{
    Report report;
    const std::vector<Rational> cs{Rational(1, 4), Rational(1, 3), Rational(2, 5)};
    for (const auto& [id, g] : graph_catalog(o.catalog, o.seed)) {
        if (!is_kr_free(g, 3) || g.order() == 0)
            continue;
        for (const auto& c : cs) {
            if (Rational(BigInt(g.min_degree())) < c * g.order())
                continue;
            auto part = vc_chromatic_partition(g, c, o.budget);
            report.merge(part.report, id + "/c=" + to_string(c) + "/");
        }
    }
    return report;
}

}  // namespace

Report run_suite(const SuiteOptions& o)
{
    Report report;
    if (o.suite == "table1")
        report = table1_suite(o);
    else if (o.suite == "halfgraph")
        report = halfgraph_suite(o);
    else if (o.suite.rfind("construction:d=", 0) == 0) {
        const std::string digits = o.suite.substr(15);
        if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw PreconditionViolated("construction suite needs d=<1..12>");
        const auto d = static_cast<std::size_t>(std::stoul(digits));
        if (d == 0 || d > 12)
            throw PreconditionViolated("construction suite needs d=<1..12>");
        report = construction_suite(d, o);
    } else if (o.suite == "mindeg-ultra")
        report = mindeg_suite(o);
    else if (o.suite == "codeg-edge")
        report = codeg_suite(o);
    else if (o.suite == "vc-chromatic")
        report = vc_chromatic_suite(o);
    else
        throw PreconditionViolated("unknown suite '" + o.suite + "'");
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    return report;
}

}  // namespace ultrafree
