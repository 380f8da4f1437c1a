#include "ultrafree/blowup.hpp"
#include "ultrafree/cli.hpp"
#include "ultrafree/constructions.hpp"
#include "ultrafree/convexity.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/io.hpp"
#include "ultrafree/setsystem.hpp"
#include "ultrafree/suites.hpp"
#include "ultrafree/ultra.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ultrafree;

namespace {

// Rationals cross the boundary as fractions.Fraction, via their exact "P/Q" text.
py::object to_fraction(const Rational& q)
{
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

Rational from_python(const py::handle& value)
{
    if (py::isinstance<py::float_>(value))
        throw PreconditionViolated("floats are not accepted; pass a Fraction, an int or a 'P/Q' string");
    return parse_rational(py::str(value).cast<std::string>());
}

py::object to_python(const nlohmann::json& j)
{
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

SearchBudget budget_of(std::optional<std::uint64_t> nodes, std::optional<std::uint64_t> millis)
{
    SearchBudget b;
    b.max_nodes = nodes;
    if (millis)
        b.max_millis = std::chrono::milliseconds(*millis);
    return b;
}

py::dict decomposition_dict(const BlowupDecomposition& d)
{
    py::dict out;
    out["parts"] = d.parts;
    out["quotient"] = d.quotient;
    out["origin"] = d.origin;
    return out;
}

std::vector<std::vector<std::size_t>> as_lists(const std::vector<Bitset>& sets)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : sets)
        out.push_back(s.members());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact invariants of graphs, set systems and convexity spaces";
    m.attr("__version__") = tool_version;

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base);
    py::register_exception<NotKrFree>(m, "NotKrFree", base);
    py::register_exception<ClaimViolation>(m, "ClaimViolation", base);
    py::register_exception<InternalContradiction>(m, "InternalContradiction", base);
    py::register_exception<Infeasible>(m, "Infeasible", base);
    auto parse = py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<SelfLoopRejected>(m, "SelfLoopRejected", parse);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::order)
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
        .def("add_edge", &Graph::add_edge)
        .def("complement", &Graph::complement)
        .def("induced", &Graph::induced)
        .def("__len__", &Graph::order)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a.order() == b.order() && a.edges() == b.edges(); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    // Input and output.
    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
    m.def("read_graph_file", &read_graph_file);
    m.def("emit_graph_json", &emit_graph_json);
    m.def("emit_dimacs", &emit_dimacs);

    // Constructions.
    m.def("turan", &turan, py::arg("n"), py::arg("parts"));
    m.def("kneser", &kneser, py::arg("m"), py::arg("k"));
    m.def("mtt", &mtt, py::arg("t"));
    m.def("half_min", &half_min, py::arg("k"));
    m.def("gamma_blowup", &gamma_blowup, py::arg("gamma"), py::arg("a"), py::arg("b"));
    m.def("ultra_vc_example", &ultra_vc_example, py::arg("n"));
    m.def("cycle", &cycle);
    m.def("path", &path);
    m.def("complete", &complete);
    m.def("empty_graph", &empty_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("petersen", &petersen);
    m.def("blowup", [](const Graph& f, const std::vector<std::size_t>& sizes) {
        auto b = blowup(f, sizes);
        return py::make_tuple(b.graph, b.origin);
    });
    m.def(
        "hypercube_lb",
        [](std::size_t d, std::size_t copies) {
            auto lb = hypercube_lb(d, copies);
            py::dict out;
            out["h"] = lb.h;
            out["g"] = lb.g;
            out["origin"] = lb.origin;
            return out;
        },
        py::arg("d"), py::arg("copies") = 0);
    m.def("connected_graph_catalog", &connected_graph_catalog, py::arg("max_n"));

    // Graph invariants.
    m.def(
        "count_cliques",
        [](const Graph& g, std::size_t b, std::optional<std::vector<std::size_t>> within) {
            if (!within)
                return count_cliques(g, b);
            return count_cliques(g, b, Bitset::from_range(g.order(), *within));
        },
        py::arg("g"), py::arg("b"), py::arg("within") = py::none());
    m.def("clique_number", &clique_number);
    m.def("max_clique", [](const Graph& g, std::optional<std::uint64_t> nodes, std::optional<std::uint64_t> ms) {
        return max_clique(g, budget_of(nodes, ms));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_ms") = py::none());
    m.def("chromatic_number", [](const Graph& g, std::optional<std::uint64_t> nodes, std::optional<std::uint64_t> ms) {
        return chromatic_number(g, budget_of(nodes, ms));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_ms") = py::none());
    m.def("optimal_coloring", [](const Graph& g) { return optimal_coloring(g); });
    m.def("enumerate_mis", [](const Graph& g, std::optional<std::uint64_t> nodes, std::optional<std::uint64_t> ms) {
        return enumerate_mis(g, budget_of(nodes, ms));
    }, py::arg("g"), py::arg("budget_nodes") = py::none(), py::arg("budget_ms") = py::none());
    m.def("codegree_min", &codegree_min);
    m.def("clique_codensity", [](const Graph& g, std::size_t a, std::size_t b) -> py::object {
        auto c = clique_codensity(g, a, b);
        return c ? to_fraction(*c) : py::none();
    });
    m.def("pi_density", [](std::size_t s, std::size_t t) { return to_fraction(pi_density(s, t)); });
    m.def("is_kr_free", &is_kr_free);
    m.def("is_maximal_kr_free", &is_maximal_kr_free);
    m.def("are_isomorphic", &are_isomorphic);

    // Set systems.
    py::class_<SetSystem>(m, "SetSystem")
        .def_static("from_lists", [](std::size_t ground, const std::vector<std::vector<std::size_t>>& sets) {
            return SetSystem::from_lists(ground, sets);
        })
        .def_property_readonly("ground_size", &SetSystem::ground_size)
        .def("__len__", &SetSystem::size)
        .def_property_readonly("sets", [](const SetSystem& f) { return as_lists(f.sets()); })
        .def_property_readonly("labels", &SetSystem::labels)
        .def("__repr__", [](const SetSystem& f) {
            return "SetSystem(ground=" + std::to_string(f.ground_size()) + ", sets=" + std::to_string(f.size()) + ")";
        });
    m.def("dual", &dual);
    m.def("disjointness_graph", &disjointness_graph);
    m.def("mis_system", [](const Graph& g) { return mis_system(g); });
    m.def("neighborhood_system", &neighborhood_system);
    m.def("transversal_number", [](const SetSystem& f) {
        auto t = transversal_number(f);
        return py::make_tuple(t.size, t.witness);
    });
    m.def("matching_number", [](const SetSystem& f) {
        auto t = matching_number(f);
        return py::make_tuple(t.size, t.witness);
    });
    m.def("fractional_transversal", [](const SetSystem& f) {
        auto lp = fractional_transversal(f);
        py::list tw, mw;
        for (const auto& w : lp.transversal.weights)
            tw.append(to_fraction(w));
        for (const auto& w : lp.matching.weights)
            mw.append(to_fraction(w));
        py::dict out;
        out["tau_star"] = to_fraction(lp.transversal.value);
        out["transversal"] = tw;
        out["nu_star"] = to_fraction(lp.matching.value);
        out["matching"] = mw;
        return out;
    });
    m.def("vc_dimension", [](const SetSystem& f) {
        auto vc = vc_dimension(f);
        return py::make_tuple(vc.dimension, vc.shattered);
    });
    m.def("helly_number", [](const SetSystem& f) { return helly_number(f); });
    m.def("has_pq_property", &has_pq_property);

    // Convexity spaces.
    py::class_<ConvexitySpace>(m, "ConvexitySpace")
        .def_static("from_graph", [](const Graph& g) { return ConvexitySpace::from_graph(g); })
        .def_static("subcubes", &ConvexitySpace::subcubes)
        .def_static("explicit", &ConvexitySpace::explicit_space)
        .def_property_readonly("kind", [](const ConvexitySpace& s) { return to_string(s.kind()); })
        .def("__len__", &ConvexitySpace::size)
        .def_property_readonly("generators", &ConvexitySpace::generators)
        .def("hull", [](const ConvexitySpace& s, const std::vector<std::size_t>& y) { return s.hull(y).members(); })
        .def("point_label", &ConvexitySpace::point_label);
    m.def("radon_number", [](const ConvexitySpace& s, std::size_t cap) { return radon_number(s, cap); });
    m.def("radon_partition", [](const ConvexitySpace& s, const std::vector<std::size_t>& y) -> py::object {
        auto p = radon_partition(s, y);
        return p ? py::object(py::make_tuple(p->first, p->second)) : py::none();
    });
    m.def("radon_independence", [](const ConvexitySpace& s) { return radon_independence(s); });
    m.def("space_helly_number", [](const ConvexitySpace& s) { return space_helly_number(s); });
    m.def(
        "weak_eps_net",
        [](const ConvexitySpace& s, const py::object& eps, std::optional<std::vector<py::object>> weights) {
            Measure mu = Measure::uniform(s.size());
            if (weights) {
                mu.weights.clear();
                for (const auto& w : *weights)
                    mu.weights.push_back(from_python(w));
            }
            return weak_eps_net(s, mu, from_python(eps));
        },
        py::arg("space"), py::arg("eps"), py::arg("weights") = py::none());

    // Ultra graphs and half graphs.
    m.def("ultra_parameter", [](const Graph& g, std::size_t r) -> py::object {
        auto cert = ultra_parameter(g, r);
        return cert.infinite() ? py::none() : to_fraction(*cert.epsilon_star);
    });
    m.def("find_half_graph", [](const Graph& g, std::size_t k) -> py::object {
        auto h = find_half_graph(g, k);
        return h ? py::object(py::make_tuple(h->xs, h->ys)) : py::none();
    });
    m.def("nu_bi", [](const Graph& g) {
        auto r = nu_bi(g);
        return py::make_tuple(r.size, r.witness.pairs);
    });

    // Blow-up decompositions.
    m.def("twin_quotient", [](const Graph& g) { return decomposition_dict(twin_quotient(g)); });
    m.def("haussler_partition", [](const Graph& g, std::size_t r, const py::object& eps) {
        auto h = haussler_partition(g, r, from_python(eps));
        py::dict out = decomposition_dict(h.decomposition);
        out["centers"] = h.centers;
        out["vc_dimension"] = h.vc_dimension;
        out["report"] = to_python(h.report.to_json());
        return out;
    });
    m.def("verify_hom", &verify_hom);
    m.def("p4_obstruction", [](const Graph& g) { return p4_obstruction(g).core; });
    m.def("vc_chromatic_partition", [](const Graph& g, const py::object& c) {
        auto p = vc_chromatic_partition(g, from_python(c));
        py::dict out;
        out["coloring"] = p.coloring;
        out["colors"] = p.colors;
        out["report"] = to_python(p.report.to_json());
        return out;
    });

    // Suites and the command line.
    m.def(
        "run_suite",
        [](const std::string& suite, const std::string& catalog, std::uint64_t seed) {
            SuiteOptions o;
            o.suite = suite;
            o.catalog = catalog == "extended" ? CatalogKind::extended : CatalogKind::small;
            o.seed = seed;
            return to_python(run_suite(o).to_json());
        },
        py::arg("suite"), py::arg("catalog") = "small", py::arg("seed") = default_catalog_seed);
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
