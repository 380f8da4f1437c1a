#include "ultrafree/ultra.hpp"

#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/setsystem.hpp"

#include <algorithm>
#include <map>

namespace ultrafree {

bool UltraCertificate::admits(const Rational& eps) const
{
    return eps > 0 && (infinite() || eps <= *epsilon_star);
}

UltraCertificate ultra_parameter(const Graph& g, std::size_t r)
{
    if (r < 3)
        throw PreconditionViolated("ultra_parameter requires r >= 3");
    if (!is_kr_free(g, r))
        throw NotKrFree("graph contains K_" + std::to_string(r));
    UltraCertificate cert;
    cert.r = r;
    const std::size_t n = g.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            auto count = count_cliques(g, r - 2, g.common_neighbors(u, v));
            if (!cert.worst_pair || count < cert.worst_count) {
                cert.worst_pair = Edge{u, v};
                cert.worst_count = count;
            }
        }
    if (cert.worst_pair) {
        BigInt denom = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(r - 2));
        cert.epsilon_star = Rational(BigInt(cert.worst_count), denom);
    }
    return cert;
}

bool is_valid_half_graph(const Graph& g, const HalfGraphEmbedding& h)
{
    const std::size_t k = h.xs.size();
    if (h.ys.size() != k)
        return false;
    std::vector<Vertex> all(h.xs);
    all.insert(all.end(), h.ys.begin(), h.ys.end());
    for (auto v : all)
        if (v >= g.order())
            return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (g.adjacent(h.xs[i], h.ys[i]))
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!g.adjacent(h.xs[i], h.ys[j]))
                return false;
    }
    return true;
}

bool is_valid_bi_induced_matching(const Graph& g, const BiInducedMatching& m)
{
    std::vector<Vertex> all;
    for (auto [u, v] : m.pairs) {
        if (u >= g.order() || v >= g.order())
            return false;
        all.push_back(u);
        all.push_back(v);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    for (std::size_t i = 0; i < m.pairs.size(); ++i)
        for (std::size_t j = 0; j < m.pairs.size(); ++j)
            if (g.adjacent(m.pairs[i].first, m.pairs[j].second) != (i == j))
                return false;
    return true;
}

namespace {

class HalfGraphSearch {
public:
    HalfGraphSearch(const Graph& g, std::size_t k, const SearchBudget& budget)
        : g_(g), k_(k), tracker_(budget, "find_half_graph"), used_(g.order())
    {
    }

    std::optional<HalfGraphEmbedding> run()
    {
        if (extend_x(g_.all_vertices()))
            return h_;
        return std::nullopt;
    }

private:
    // `pool` holds the vertices adjacent to every chosen y: the candidates for the next x.
    bool extend_x(const Bitset& pool)
    {
        if (h_.xs.size() == k_)
            return true;
        Bitset cand = pool - used_;
        for (auto x = cand.first(); x != Bitset::npos; x = cand.next(x + 1)) {
            tracker_.tick();
            h_.xs.push_back(x);
            used_.set(x);
            if (extend_y(pool, x))
                return true;
            used_.reset(x);
            h_.xs.pop_back();
        }
        return false;
    }

    bool extend_y(const Bitset& pool, Vertex x)
    {
        const std::size_t remaining = k_ - h_.xs.size();
        Bitset cand = g_.all_vertices() - g_.neighbors(x) - used_;
        for (auto y = cand.first(); y != Bitset::npos; y = cand.next(y + 1)) {
            tracker_.tick();
            Bitset next = pool & g_.neighbors(y);
            next.reset(y);
            if ((next - used_).count() < remaining)
                continue;
            h_.ys.push_back(y);
            used_.set(y);
            if (extend_x(next))
                return true;
            used_.reset(y);
            h_.ys.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    BudgetTracker tracker_;
    Bitset used_;
    HalfGraphEmbedding h_;
};

}  // namespace

std::optional<HalfGraphEmbedding> find_half_graph(const Graph& g, std::size_t k, const SearchBudget& budget)
{
    if (k == 0)
        throw PreconditionViolated("find_half_graph requires k >= 1");
    if (2 * k > g.order())
        return std::nullopt;
    auto found = HalfGraphSearch(g, k, budget).run();
    if (found && !is_valid_half_graph(g, *found))
        throw InternalContradiction("find_half_graph produced an invalid embedding");
    return found;
}

std::size_t build_half_guarantee(std::size_t t, const Rational& eps)
{
    if (eps <= 0 || eps > 1)
        throw PreconditionViolated("build_half_guarantee requires 0 < eps <= 1");
    const Rational ratio = Rational(2) / eps;
    std::size_t k = 0;
    Rational power = ratio;
    while (power <= t) {
        ++k;
        power *= ratio;
    }
    return k;
}

HalfGraphEmbedding build_half_from_matching(const Graph& g, const BiInducedMatching& m, std::size_t r,
                                            const Rational& eps, const BuildHalfOptions& options)
{
    if (r < 3)
        throw PreconditionViolated("build_half_from_matching requires r >= 3");
    if (eps <= 0 || eps > 1)
        throw PreconditionViolated("build_half_from_matching requires 0 < eps <= 1");
    if (!is_valid_bi_induced_matching(g, m))
        throw PreconditionViolated("input is not a bipartite induced matching");
    if (options.check_ultra && !ultra_parameter(g, r).admits(eps))
        throw PreconditionViolated("graph is not eps-ultra maximal K_r-free");
    const Rational two_over_eps = Rational(2) / eps;
    if (Rational(BigInt(m.pairs.size())) < two_over_eps)
        throw PreconditionViolated("matching needs at least 2/eps pairs");

    HalfGraphEmbedding h;
    Bitset used(g.order());
    std::vector<std::size_t> alive(m.pairs.size());
    for (std::size_t i = 0; i < alive.size(); ++i)
        alive[i] = i;

    while (alive.size() >= 2 && Rational(BigInt(alive.size())) >= two_over_eps) {
        const std::size_t q = alive.size();
        const Vertex a1 = m.pairs[alive[0]].first;
        const Vertex b1 = m.pairs[alive[0]].second;
        used.set(a1);

        // For every K_{r-2} avoiding a_1 inside N(b_1): the a_i (i >= 2) whose co-neighbourhood
        // with b_1 contains it. Ties go to the lexicographically least clique.
        Bitset region = g.neighbors(b1);
        region.reset(a1);
        VertexSet best_clique;
        std::vector<std::size_t> best_hits;
        for_each_clique(g, r - 2, region, [&](const VertexSet& clique) {
            std::vector<std::size_t> hits;
            for (std::size_t i = 1; i < q; ++i) {
                const Vertex ai = m.pairs[alive[i]].first;
                if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(ai, c); }))
                    hits.push_back(alive[i]);
            }
            if (hits.size() > best_hits.size()) {
                best_hits = std::move(hits);
                best_clique = clique;
            }
        });
        if (Rational(BigInt(best_hits.size())) < eps * q / 2)
            throw InternalContradiction("no K_" + std::to_string(r - 2) + " is shared by eps*q/2 co-neighbourhoods of " +
                                        "b = " + std::to_string(b1));
        Vertex c = g.order();
        for (auto v : best_clique)
            if (!g.adjacent(a1, v) && !used.test(v)) {
                c = v;
                break;
            }
        if (c == g.order())
            throw InternalContradiction("a = " + std::to_string(a1) + " is adjacent to the whole shared clique");
        h.xs.push_back(a1);
        h.ys.push_back(c);
        used.set(c);
        alive = std::move(best_hits);
    }
    if (!is_valid_half_graph(g, h))
        throw InternalContradiction("build_half_from_matching produced an invalid half graph");
    return h;
}

NuBiResult nu_bi(const Graph& g, const SearchBudget& budget)
{
    // Oriented edges (u, v); two are compatible when their four ends are distinct and the cross
    // pairs u v' and u' v are non-edges.
    std::vector<Edge> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    Graph compat(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [u, v] = arcs[i];
            auto [x, y] = arcs[j];
            if (u == x || u == y || v == x || v == y)
                continue;
            if (!g.adjacent(u, y) && !g.adjacent(x, v))
                compat.add_edge(i, j);
        }
    NuBiResult out{0, {}};
    for (auto i : max_clique(compat, budget))
        out.witness.pairs.push_back(arcs[i]);
    out.size = out.witness.pairs.size();
    if (!is_valid_bi_induced_matching(g, out.witness))
        throw InternalContradiction("nu_bi produced an invalid matching");
    return out;
}

Report check_vc_clique_bound(const Graph& g, std::size_t r, const Rational& eps, const SearchBudget& budget)
{
    if (!ultra_parameter(g, r).admits(eps))
        throw PreconditionViolated("graph is not eps-ultra maximal K_r-free");
    const BigInt t = ceil(Rational(1) / eps) + 1;
    const BigInt bound = t + r - 4;
    auto vc = vc_dimension(neighborhood_system(g), budget);
    Report report;
    report.add("vc_clique_bound", BigInt(vc.dimension) <= bound,
               {{"vc", vc.dimension}, {"bound", bound.str()}, {"t", t.str()}, {"r", r}},
               {{"shattered", vc.shattered}}, "VC-dimension of the neighbourhood system is at most t + r - 4");
    return report;
}

}  // namespace ultrafree
