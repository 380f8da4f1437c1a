#include "ultrafree/blowup.hpp"

#include "ultrafree/errors.hpp"
#include "ultrafree/ultra.hpp"

#include <algorithm>
#include <unordered_map>

namespace ultrafree {

bool verify_decomposition(const Graph& g, const BlowupDecomposition& d, std::string* why)
{
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    const std::size_t n = g.order();
    if (d.origin.size() != n)
        return fail("origin has wrong length");
    if (d.parts.size() != d.quotient.order())
        return fail("part count differs from quotient order");
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (d.parts[i].empty())
            return fail("part " + std::to_string(i) + " is empty");
        for (auto v : d.parts[i]) {
            if (v >= n || seen[v])
                return fail("vertex " + std::to_string(v) + " is out of range or repeated");
            seen[v] = 1;
            if (d.origin[v] != i)
                return fail("origin of " + std::to_string(v) + " disagrees with its part");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        return fail("parts do not cover V(G)");
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool expect = d.origin[u] != d.origin[v] && d.quotient.adjacent(d.origin[u], d.origin[v]);
            if (g.adjacent(u, v) != expect)
                return fail("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") breaks the blow-up");
        }
    return true;
}

bool verify_hom(const Graph& g, const Graph& f, const std::vector<Vertex>& phi)
{
    if (phi.size() != g.order())
        throw PreconditionViolated("verify_hom: map must be total on V(G)");
    for (auto x : phi)
        if (x >= f.order())
            throw PreconditionViolated("verify_hom: image outside V(F)");
    for (auto [u, v] : g.edges())
        if (phi[u] == phi[v] || !f.adjacent(phi[u], phi[v]))
            return false;
    return true;
}

std::vector<std::size_t> separated_subfamily(const SetSystem& f, const Rational& s)
{
    if (s < 0)
        throw PreconditionViolated("separated_subfamily requires s >= 0");
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < f.size(); ++i) {
        bool far = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) {
            return Rational(BigInt(f[i].symmetric_difference_count(f[j]))) > s;
        });
        if (far)
            chosen.push_back(i);
    }
    return chosen;
}

Rational packing_bound(std::size_t d, std::size_t m, const Rational& separation)
{
    if (separation <= 0)
        throw PreconditionViolated("packing_bound requires positive separation");
    const Rational e = e_upper();
    return e * (d + 1) * pow(2 * e * m / separation, static_cast<unsigned>(d));
}

namespace {

struct Clustering {
    std::vector<Vertex> centers;
    std::vector<VertexSet> parts;
};

// Assigns each vertex to the least center within symmetric-difference distance s.
Clustering cluster_neighbourhoods(const Graph& g, const Rational& s)
{
    Clustering c;
    const SetSystem nbhd = neighborhood_system(g);
    c.centers = separated_subfamily(nbhd, s);
    c.parts.resize(c.centers.size());
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t home = c.centers.size();
        for (std::size_t i = 0; i < c.centers.size(); ++i)
            if (Rational(BigInt(nbhd[v].symmetric_difference_count(nbhd[c.centers[i]]))) <= s) {
                home = i;
                break;
            }
        if (home == c.centers.size())
            throw ClaimViolation("separated family is not maximal: vertex " + std::to_string(v) + " has no center");
        c.parts[home].push_back(v);
    }
    return c;
}

BlowupDecomposition quotient_of(const Graph& g, std::vector<VertexSet> parts)
{
    BlowupDecomposition d;
    d.parts = std::move(parts);
    d.origin.assign(g.order(), 0);
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        for (auto v : d.parts[i])
            d.origin[v] = i;
    d.quotient = Graph(d.parts.size());
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        for (std::size_t j = i + 1; j < d.parts.size(); ++j)
            if (g.adjacent(d.parts[i].front(), d.parts[j].front()))
                d.quotient.add_edge(i, j);
    return d;
}

}  // namespace

HausslerResult haussler_partition(const Graph& g, std::size_t r, const Rational& eps, const SearchBudget& budget)
{
    if (!ultra_parameter(g, r).admits(eps))
        throw PreconditionViolated("graph is not eps-ultra maximal K_r-free");
    const std::size_t n = g.order();
    HausslerResult out;
    Report& rep = out.report;
    auto require = [&](const std::string& name, bool ok, nlohmann::json value, nlohmann::json witness,
                       const std::string& claim) {
        rep.add(name, ok, value, witness, claim);
        if (!ok)
            throw ClaimViolation(name + " failed: " + witness.dump());
    };

    out.s = eps * n / 10;
    Clustering cl = cluster_neighbourhoods(g, out.s);
    out.centers = cl.centers;

    // Vertices sharing a part have the same neighbours outside the pair.
    nlohmann::json cherry = nullptr;
    for (const auto& part : cl.parts) {
        for (std::size_t a = 0; a < part.size() && cherry.is_null(); ++a)
            for (std::size_t b = 0; b < part.size() && cherry.is_null(); ++b) {
                if (a == b)
                    continue;
                Bitset diff = g.neighbors(part[a]) - g.neighbors(part[b]);
                diff.reset(part[b]);
                if (diff.any())
                    cherry = {{"v", part[a]}, {"w", part[b]}, {"u", diff.first()}};
            }
    }
    require("cherry", cherry.is_null(), {{"parts", cl.parts.size()}}, cherry,
            "no u is adjacent to exactly one of two vertices in a common part");

    std::vector<VertexSet> parts;
    nlohmann::json dependent = nullptr;
    for (const auto& part : cl.parts) {
        if (part.size() >= r) {
            if (!is_independent(g, part) && dependent.is_null())
                dependent = part;
            parts.push_back(part);
        } else {
            for (auto v : part)
                parts.push_back({v});
        }
    }
    require("large_parts_independent", dependent.is_null(), nullptr, dependent,
            "parts with at least r vertices are independent");

    nlohmann::json mixed = nullptr;
    for (std::size_t i = 0; i < parts.size() && mixed.is_null(); ++i)
        for (std::size_t j = i + 1; j < parts.size() && mixed.is_null(); ++j) {
            std::size_t edges = 0;
            for (auto u : parts[i])
                edges += g.neighbors(u).intersection_count(Bitset::from_range(n, parts[j]));
            if (edges != 0 && edges != parts[i].size() * parts[j].size())
                mixed = {{"i", i}, {"j", j}, {"edges", edges}};
        }
    require("complete_or_empty", mixed.is_null(), nullptr, mixed,
            "distinct parts are complete or anti-complete to each other");

    out.decomposition = quotient_of(g, std::move(parts));
    const BlowupDecomposition& d = out.decomposition;
    std::string why;
    require("blowup_identity", verify_decomposition(g, d, &why), {{"quotient_order", d.quotient.order()}},
            why.empty() ? nlohmann::json(nullptr) : nlohmann::json(why), "G = F[.] under the origin map");
    require("homomorphism", verify_hom(g, d.quotient, d.origin), nullptr, nullptr,
            "the origin map is a homomorphism onto F");
    require("quotient_maximal_kr_free", is_maximal_kr_free(d.quotient, r), {{"r", r}}, nullptr,
            "F is maximal K_r-free");
    require("quotient_size", d.quotient.order() <= (r - 1) * out.centers.size(),
            {{"quotient_order", d.quotient.order()}, {"centers", out.centers.size()}, {"r", r}}, nullptr,
            "|F| <= (r-1) |X|");

    out.vc_dimension = vc_dimension(neighborhood_system(g), budget).dimension;
    const Rational separation = Rational(floor(out.s) + 1);
    const Rational bound = packing_bound(out.vc_dimension, n, separation);
    require("packing", Rational(BigInt(out.centers.size())) <= bound,
            {{"centers", out.centers.size()},
             {"vc", out.vc_dimension},
             {"s", to_string(out.s)},
             {"bound", to_string(bound)}},
            nullptr, "|X| <= e(d+1)(2e|F|/s)^d for the separated family X");
    return out;
}

BlowupDecomposition twin_quotient(const Graph& g)
{
    std::unordered_map<Bitset, std::size_t, BitsetHash> index;
    std::vector<VertexSet> parts;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [it, fresh] = index.emplace(g.neighbors(v), parts.size());
        if (fresh)
            parts.push_back({});
        parts[it->second].push_back(v);
    }
    return quotient_of(g, std::move(parts));
}

ObstructionCertificate p4_obstruction(const Graph& g, const SearchBudget& budget)
{
    const std::size_t n = g.order();
    Graph linked(n);
    std::map<Edge, P4Link> all_links;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (auto link = has_induced_p4(g, u, v)) {
                linked.add_edge(u, v);
                all_links.emplace(Edge{u, v}, *link);
            }
    ObstructionCertificate cert;
    cert.core = max_clique(linked, budget);
    for (std::size_t a = 0; a < cert.core.size(); ++a)
        for (std::size_t b = a + 1; b < cert.core.size(); ++b) {
            Edge key{cert.core[a], cert.core[b]};
            cert.links.emplace(key, all_links.at(key));
        }
    return cert;
}

bool is_valid_obstruction(const Graph& g, const ObstructionCertificate& c)
{
    for (std::size_t a = 0; a < c.core.size(); ++a)
        for (std::size_t b = a + 1; b < c.core.size(); ++b) {
            auto it = c.links.find(Edge{c.core[a], c.core[b]});
            if (it == c.links.end() || !is_induced_p4(g, c.core[a], it->second.y, it->second.z, c.core[b]))
                return false;
        }
    return true;
}

ChromaticPartition vc_chromatic_partition(const Graph& g, const Rational& c, const SearchBudget& budget)
{
    const std::size_t n = g.order();
    if (c <= 0)
        throw PreconditionViolated("vc_chromatic_partition requires c > 0");
    if (n == 0)
        throw PreconditionViolated("vc_chromatic_partition requires a non-empty graph");
    if (!is_kr_free(g, 3))
        throw PreconditionViolated("vc_chromatic_partition requires a triangle-free graph");
    if (Rational(BigInt(g.min_degree())) < c * n)
        throw PreconditionViolated("minimum degree is below c n");

    const Rational s = c * n / 3;
    Clustering cl = cluster_neighbourhoods(g, s);
    ChromaticPartition out;
    out.colors = cl.parts.size();
    out.coloring.assign(n, 0);
    for (std::size_t i = 0; i < cl.parts.size(); ++i) {
        for (auto v : cl.parts[i])
            out.coloring[v] = i;
        if (!is_independent(g, cl.parts[i]))
            throw ClaimViolation("part " + std::to_string(i) + " of the neighbourhood clustering has an edge");
    }
    out.report.add("parts_independent", true, {{"colors", out.colors}}, nullptr,
                   "vertices with close neighbourhoods share a neighbour and so are non-adjacent");

    out.vc_dimension = vc_dimension(neighborhood_system(g), budget).dimension;
    const std::size_t d = out.vc_dimension;
    const Rational e = e_upper();
    const Rational stated = e * (d + 1) * pow(2 * e / (3 * c), static_cast<unsigned>(d));
    const Rational packing = packing_bound(d, n, Rational(floor(s) + 1));
    const Rational m = Rational(BigInt(out.colors));
    out.report.add("colors_within_stated_bound", m <= stated,
                   {{"colors", out.colors}, {"vc", d}, {"bound", to_string(stated)}}, nullptr,
                   "chi(G) <= e(d+1)(2e/3c)^d");
    out.report.add("colors_within_packing_bound", m <= packing,
                   {{"colors", out.colors}, {"vc", d}, {"bound", to_string(packing)}}, nullptr,
                   "number of parts obeys the packing bound for the separated family");
    return out;
}

Report min_degree_ultra_check(const Graph& g, std::size_t r, const Rational& eps)
{
    if (r < 3)
        throw PreconditionViolated("min_degree_ultra_check requires r >= 3");
    if (eps <= 0)
        throw PreconditionViolated("min_degree_ultra_check requires eps > 0");
    if (!is_maximal_kr_free(g, r))
        throw PreconditionViolated("graph is not maximal K_r-free");
    const std::size_t n = g.order();
    const Rational ratio(BigInt(2 * r - 5), BigInt(2 * r - 3));
    if (Rational(BigInt(g.min_degree())) < (ratio + eps) * n)
        throw PreconditionViolated("minimum degree is below ((2r-5)/(2r-3) + eps) n");
    auto cert = ultra_parameter(g, r);
    const Rational target = pow(eps, static_cast<unsigned>(r - 2));
    Report rep;
    rep.add("min_degree_to_ultra", cert.infinite() || *cert.epsilon_star >= target,
            {{"epsilon_star", cert.infinite() ? std::string("infinite") : to_string(*cert.epsilon_star)},
             {"required", to_string(target)}},
            cert.worst_pair ? nlohmann::json({cert.worst_pair->first, cert.worst_pair->second})
                            : nlohmann::json(nullptr),
            "min degree above (2r-5)/(2r-3) + eps forces eps^{r-2}-ultra");
    return rep;
}

}  // namespace ultrafree
