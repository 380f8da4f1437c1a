#include "ultrafree/cli.hpp"

#include "ultrafree/blowup.hpp"
#include "ultrafree/constructions.hpp"
#include "ultrafree/convexity.hpp"
#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/io.hpp"
#include "ultrafree/setsystem.hpp"
#include "ultrafree/suites.hpp"
#include "ultrafree/ultra.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ultrafree {

namespace {

struct GlobalOptions {
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::uint64_t> budget_ms;
    bool json = false;
    bool timing = false;

    SearchBudget budget() const
    {
        SearchBudget b;
        b.max_nodes = budget_nodes;
        auto ms = budget_ms;
        if (!ms) {
            if (const char* env = std::getenv("ULTRAFREE_BUDGET_MS"); env && *env) {
                char* end = nullptr;
                auto v = std::strtoull(env, &end, 10);
                if (*end != '\0' || v == 0)
                    throw PreconditionViolated("ULTRAFREE_BUDGET_MS must be a positive integer");
                ms = v;
            }
        }
        if (ms)
            b.max_millis = std::chrono::milliseconds(*ms);
        return b;
    }
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

std::size_t to_size(const std::string& s, const std::string& what)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw PreconditionViolated(what + " must be a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
}

// "@path", or a small family written as name:arg:arg (cycle:5, kbip:2:2, petersen, ...).
Graph graph_argument(const std::string& spec)
{
    if (!spec.empty() && spec[0] == '@')
        return read_graph_file(spec.substr(1));
    auto parts = split(spec, ':');
    const std::string& name = parts.empty() ? spec : parts[0];
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i)
            throw PreconditionViolated("graph argument '" + spec + "' is missing a parameter");
        return to_size(parts[i], "graph parameter");
    };
    if (name == "cycle")
        return cycle(arg(1));
    if (name == "path")
        return path(arg(1));
    if (name == "complete")
        return complete(arg(1));
    if (name == "empty")
        return empty_graph(arg(1));
    if (name == "kbip" || name == "complete_bipartite")
        return complete_bipartite(arg(1), arg(2));
    if (name == "petersen")
        return petersen();
    if (name == "turan")
        return turan(arg(1), arg(2));
    if (name == "kneser")
        return kneser(arg(1), arg(2));
    if (name == "mtt")
        return mtt(arg(1));
    throw PreconditionViolated("unknown graph argument '" + spec + "'");
}

ConstructionSpec construction_spec(const std::string& family, const std::vector<std::string>& params)
{
    ConstructionSpec spec;
    spec.family = family;
    for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw PreconditionViolated("parameter '" + p + "' is not of the form key=value");
        const std::string key = p.substr(0, eq);
        const std::string value = p.substr(eq + 1);
        if (key == "sizes") {
            for (const auto& s : split(value, ','))
                spec.sizes.push_back(to_size(s, "sizes entry"));
        } else if (key == "gamma" || key == "graph") {
            spec.graphs.emplace(key, graph_argument(value));
        } else {
            spec.ints.emplace(key, static_cast<std::int64_t>(to_size(value, key)));
        }
    }
    return spec;
}

std::string rational_or_infinite(const UltraCertificate& c)
{
    return c.infinite() ? "infinite" : to_string(*c.epsilon_star);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw PreconditionViolated("cannot write '" + path + "'");
    f << text;
}

void print_report(std::ostream& out, const Report& report, bool json, std::optional<double> timing_ms)
{
    if (json) {
        auto j = report.to_json();
        if (timing_ms)
            j["timing_ms"] = *timing_ms;
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& c : report.checks)
        if (c.status == CheckStatus::fail)
            out << "FAIL " << c.name << "  value=" << c.value.dump() << "  witness=" << c.witness.dump() << '\n';
    out << "checks: " << report.checks.size() << "  pass: " << report.count(CheckStatus::pass)
        << "  fail: " << report.count(CheckStatus::fail) << "  skipped: " << report.count(CheckStatus::skipped)
        << '\n';
    if (timing_ms)
        out << "time: " << *timing_ms << " ms\n";
}

int cmd_gen(const GlobalOptions&, const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, const std::string& format, std::ostream& out)
{
    Graph g = construct(construction_spec(family, params));
    std::string text;
    if (format == "json")
        text = emit_graph_json(g);
    else if (format == "dimacs")
        text = emit_dimacs(g);
    else
        throw PreconditionViolated("unknown format '" + format + "'");
    if (out_path.empty())
        out << text;
    else
        write_text(out_path, text);
    return exit_pass;
}

int cmd_analyze(const GlobalOptions& o, const std::string& file, const std::string& metrics, bool witness,
                std::ostream& out)
{
    const std::string text = read_file(file);
    const Graph g = parse_graph(text);
    const SearchBudget budget = o.budget();
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::object();
    for (const auto& m : split(metrics, ',')) {
        auto parts = split(m, ':');
        const std::string& name = parts.empty() ? m : parts[0];
        auto arg = [&](std::size_t i) {
            if (parts.size() <= i)
                throw PreconditionViolated("metric '" + m + "' is missing a parameter");
            return to_size(parts[i], "metric parameter");
        };
        if (name == "n") {
            result["n"] = g.order();
        } else if (name == "edges") {
            result["edges"] = g.edge_count();
        } else if (name == "chi") {
            auto col = optimal_coloring(g, budget);
            result["chi"] = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
            witnesses["chi"] = col;
        } else if (name == "omega") {
            auto c = max_clique(g, budget);
            result["omega"] = c.size();
            witnesses["omega"] = c;
        } else if (name == "mis") {
            auto all = enumerate_mis(g, budget);
            result["mis"] = all.size();
            witnesses["mis"] = all;
        } else if (name == "nubi") {
            auto nb = nu_bi(g, budget);
            result["nubi"] = nb.size;
            witnesses["nubi"] = nb.witness.pairs;
        } else if (name == "ultra") {
            auto cert = ultra_parameter(g, arg(1));
            result[m] = rational_or_infinite(cert);
            if (cert.worst_pair)
                witnesses[m] = {{"pair", {cert.worst_pair->first, cert.worst_pair->second}}, {"count", cert.worst_count}};
        } else if (name == "codegree") {
            auto c = codegree_min(g, arg(1));
            result[m] = c ? nlohmann::json(*c) : nlohmann::json(nullptr);
        } else if (name == "codensity") {
            auto c = clique_codensity(g, arg(1), arg(2));
            result[m] = c ? nlohmann::json(to_string(*c)) : nlohmann::json(nullptr);
        } else {
            throw PreconditionViolated("unknown metric '" + m + "'");
        }
    }
    if (witness)
        result["witness"] = witnesses;
    out << result.dump() << '\n';
    return exit_pass;
}

int cmd_setsys(const GlobalOptions& o, const std::string& file, const std::string& derive,
               const std::string& metrics, bool witness, std::ostream& out)
{
    const std::string text = read_file(file);
    const SearchBudget budget = o.budget();
    SetSystem f;
    if (derive.empty()) {
        f = setsystem_from_json(parse_json(text));
    } else {
        const Graph g = parse_graph(text);
        if (derive == "bg")
            f = mis_system(g, budget);
        else if (derive == "dual")
            f = dual(mis_system(g, budget));
        else if (derive == "nbhd")
            f = neighborhood_system(g);
        else
            throw PreconditionViolated("unknown derivation '" + derive + "'");
    }
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::object();
    if (metrics.empty())
        result["system"] = setsystem_to_json(f);
    for (const auto& m : split(metrics, ',')) {
        auto parts = split(m, ':');
        const std::string& name = parts.empty() ? m : parts[0];
        if (name == "system") {
            result["system"] = setsystem_to_json(f);
        } else if (name == "tau") {
            auto t = transversal_number(f, budget);
            result["tau"] = t.size;
            witnesses["tau"] = t.witness;
        } else if (name == "nu") {
            auto n = matching_number(f, budget);
            result["nu"] = n.size;
            witnesses["nu"] = n.witness;
        } else if (name == "taustar") {
            auto lp = fractional_transversal(f);
            std::vector<std::string> tw, mw;
            for (const auto& w : lp.transversal.weights)
                tw.push_back(to_string(w));
            for (const auto& w : lp.matching.weights)
                mw.push_back(to_string(w));
            result["taustar"] = to_string(lp.transversal.value);
            witnesses["taustar"] = tw;
            result["nustar"] = to_string(lp.matching.value);
            witnesses["nustar"] = mw;
        } else if (name == "vc") {
            auto vc = vc_dimension(f, budget);
            result["vc"] = vc.dimension;
            witnesses["vc"] = vc.shattered;
        } else if (name == "helly") {
            result["helly"] = helly_number(f, budget);
        } else if (name == "pq") {
            if (parts.size() != 3)
                throw PreconditionViolated("metric pq needs the form pq:P:Q");
            result[m] = has_pq_property(f, to_size(parts[1], "p"), to_size(parts[2], "q"));
        } else {
            throw PreconditionViolated("unknown metric '" + m + "'");
        }
    }
    if (witness)
        result["witness"] = witnesses;
    out << result.dump() << '\n';
    return exit_pass;
}

int cmd_space(const GlobalOptions& o, const std::string& file, std::optional<std::size_t> radon_cap,
              const std::string& weak_net, const std::string& measure, bool helly, std::ostream& out)
{
    const std::string text = read_file(file);
    const SearchBudget budget = o.budget();
    auto start = text.find_first_not_of(" \t\r\n");
    std::optional<ConvexitySpace> space;
    if (start != std::string::npos && text[start] == '{') {
        auto j = parse_json(text);
        if (j.contains("kind"))
            space = space_from_json(j, budget);
        else
            space = ConvexitySpace::from_graph(graph_from_json(j), budget);
    } else {
        space = ConvexitySpace::from_graph(parse_graph(text), budget);
    }
    const ConvexitySpace& s = *space;
    nlohmann::json result;
    result["kind"] = to_string(s.kind());
    result["points"] = s.size();
    if (radon_cap) {
        auto r = radon_number(s, *radon_cap, budget);
        result["radon"] = r ? nlohmann::json(*r) : nlohmann::json("exceeds_cap");
        result["radon_independence"] = radon_independence(s, budget);
    }
    if (helly)
        result["helly"] = space_helly_number(s, budget);
    if (!weak_net.empty()) {
        Measure mu = measure == "uniform" ? Measure::uniform(s.size()) : measure_from_json(parse_json(read_file(measure)));
        result["weak_net"] = weak_eps_net(s, mu, parse_rational(weak_net), budget);
    }
    out << result.dump() << '\n';
    return exit_pass;
}

int cmd_decompose(const GlobalOptions& o, const std::string& file, std::size_t r, const std::string& eps_text,
                  const std::string& method, const std::string& out_path, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::string text = read_file(file);
    const Graph g = parse_graph(text);
    Report report;
    report.input_digest = fnv1a_digest(text);
    BlowupDecomposition d;
    int code = exit_pass;
    if (method == "twin") {
        d = twin_quotient(g);
        std::string why;
        report.add("blowup_identity", verify_decomposition(g, d, &why), {{"quotient_order", d.quotient.order()}},
                   why.empty() ? nlohmann::json(nullptr) : nlohmann::json(why), "G = F[.] under the origin map");
    } else if (method == "haussler") {
        Rational eps;
        if (eps_text.empty()) {
            auto cert = ultra_parameter(g, r);
            eps = cert.infinite() ? Rational(1) : *cert.epsilon_star;
        } else {
            eps = parse_rational(eps_text);
        }
        try {
            auto h = haussler_partition(g, r, eps, o.budget());
            d = h.decomposition;
            report.merge(h.report);
        } catch (const ClaimViolation& e) {
            report.add("haussler_partition", false, nullptr, e.what(), "every pipeline claim holds");
            code = exit_fail;
        }
    } else {
        throw PreconditionViolated("unknown method '" + method + "'");
    }
    if (!report.all_pass())
        code = exit_fail;
    std::optional<double> timing;
    if (o.timing)
        timing = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!out_path.empty()) {
        write_text(out_path, decomposition_to_json(d).dump() + "\n");
        print_report(out, report, o.json, timing);
    } else {
        nlohmann::json j = {{"decomposition", decomposition_to_json(d)}, {"report", report.to_json()}};
        if (timing)
            j["timing_ms"] = *timing;
        out << j.dump() << '\n';
    }
    return code;
}

int cmd_verify(const GlobalOptions& o, const std::string& suite, const std::string& catalog, std::uint64_t seed,
               std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    SuiteOptions so;
    so.suite = suite;
    if (catalog == "small")
        so.catalog = CatalogKind::small;
    else if (catalog == "extended")
        so.catalog = CatalogKind::extended;
    else
        throw PreconditionViolated("unknown catalog '" + catalog + "'");
    so.seed = seed;
    so.budget = o.budget();
    Report report = run_suite(so);
    report.input_digest = fnv1a_digest(suite + "|" + catalog + "|" + std::to_string(seed));
    std::optional<double> timing;
    if (o.timing)
        timing = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    print_report(out, report, o.json, timing);
    return report.all_pass() ? exit_pass : exit_fail;
}

void print_error(std::ostream& out, std::ostream& err, bool json, const std::string& type, const std::exception& e,
                 const ParseError* pe = nullptr)
{
    if (json) {
        nlohmann::json j = {{"error", {{"type", type}, {"message", e.what()}}}};
        if (pe && pe->line() != 0) {
            j["error"]["line"] = pe->line();
            j["error"]["column"] = pe->column();
        }
        out << j.dump() << '\n';
    } else {
        err << "error: " << e.what() << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    GlobalOptions g;
    CLI::App app{"Exact graph/convexity-space toolkit for ultra maximal K_r-free graphs", "ultrafree"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--budget-nodes", g.budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
    app.add_option("--budget-ms", g.budget_ms, "Search time budget in milliseconds")->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json, "Machine-readable output and errors");
    app.add_flag("--timing", g.timing, "Include wall-clock timing in reports");

    std::string family, out_path, format = "json";
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "Emit a construction");
    gen->add_option("family", family, "turan|kneser|mtt|half_min|gamma_blowup|hypercube_lb|ultra_vc_example|blowup|"
                                      "cycle|path|complete|empty|complete_bipartite|petersen")
        ->required();
    gen->add_option("--params", params, "key=value parameters; graphs as @file or name:args");
    gen->add_option("--out", out_path, "Output file (default stdout)");
    gen->add_option("--format", format, "json|dimacs");

    std::string file, metrics;
    auto* analyze = app.add_subcommand("analyze", "Graph invariants");
    analyze->add_option("file", file)->required();
    bool witness = false;
    analyze->add_flag("--witness", witness, "Include witnesses under \"witness\"");
    analyze->add_option("--metrics", metrics, "chi,omega,mis,nubi,ultra:R,codegree:A,codensity:A:B,n,edges")
        ->required();

    std::string derive, set_metrics;
    auto* setsys = app.add_subcommand("setsys", "Set-system invariants");
    setsys->add_option("file", file)->required();
    setsys->add_flag("--witness", witness, "Include witnesses under \"witness\"");
    setsys->add_option("--derive", derive, "bg|dual|nbhd (input is then a graph)");
    setsys->add_option("--metrics", set_metrics, "tau,nu,taustar,vc,helly,pq:P:Q,system");

    std::optional<std::size_t> radon_cap;
    std::string weak_net, measure = "uniform";
    bool helly = false;
    auto* space = app.add_subcommand("space", "Convexity-space invariants");
    space->add_option("file", file)->required();
    space->add_option("--radon-cap", radon_cap, "Compute the Radon number up to this cap");
    space->add_option("--weak-net", weak_net, "Compute a weak eps-net for eps = P/Q");
    space->add_option("--measure", measure, "uniform or a JSON file {\"weights\": [\"P/Q\", ...]}");
    space->add_flag("--helly", helly, "Compute the Helly number");

    std::size_t r = 3;
    std::string eps_text, method = "haussler", decomp_out;
    auto* decompose = app.add_subcommand("decompose", "Blow-up decomposition");
    decompose->add_option("file", file)->required();
    decompose->add_option("--r", r, "Clique order r")->check(CLI::Range(3, 64));
    decompose->add_option("--eps", eps_text, "P/Q (default: the exact ultra parameter)");
    decompose->add_option("--method", method, "haussler|twin");
    decompose->add_option("--out", decomp_out, "Write the decomposition JSON here");

    std::string suite, catalog = "small";
    std::uint64_t seed = default_catalog_seed;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "table1|halfgraph|construction:d=D|mindeg-ultra|codeg-edge|vc-chromatic")
        ->required();
    verify->add_option("--catalog", catalog, "small|extended");
    verify->add_option("--seed", seed, "Seed for the extended catalog");

    for (auto* sub : {gen, analyze, setsys, space, decompose, verify})
        sub->fallthrough();

    std::vector<const char*> argv{"ultrafree"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*gen)
            return cmd_gen(g, family, params, out_path, format, out);
        if (*analyze)
            return cmd_analyze(g, file, metrics, witness, out);
        if (*setsys)
            return cmd_setsys(g, file, derive, set_metrics, witness, out);
        if (*space)
            return cmd_space(g, file, radon_cap, weak_net, measure, helly, out);
        if (*decompose)
            return cmd_decompose(g, file, r, eps_text, method, decomp_out, out);
        if (*verify)
            return cmd_verify(g, suite, catalog, seed, out);
    } catch (const BudgetExceeded& e) {
        print_error(out, err, g.json, "budget_exceeded", e);
        return exit_budget;
    } catch (const ParseError& e) {
        print_error(out, err, g.json, dynamic_cast<const SelfLoopRejected*>(&e) ? "self_loop_rejected" : "parse_error",
                    e, &e);
        return exit_usage;
    } catch (const PreconditionViolated& e) {
        print_error(out, err, g.json, "precondition_violated", e);
        return exit_usage;
    } catch (const Infeasible& e) {
        print_error(out, err, g.json, "infeasible", e);
        return exit_usage;
    } catch (const Error& e) {
        print_error(out, err, g.json, "claim_violation", e);
        return exit_fail;
    }
    return exit_usage;
}

}  // namespace ultrafree
