#include "ultrafree/constructions.hpp"

#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace ultrafree {

Graph turan(std::size_t n, std::size_t parts)
{
    if (parts == 0 || n < parts)
        throw PreconditionViolated("turan requires 1 <= parts <= n");
    std::vector<std::size_t> part_of(n);
    std::size_t v = 0;
    for (std::size_t p = 0; p < parts; ++p) {
        std::size_t size = n / parts + (p < n % parts ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i)
            part_of[v++] = p;
    }
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b])
                g.add_edge(a, b);
    return g;
}

Graph kneser(std::size_t m, std::size_t k)
{
    if (m < 2 * k || k == 0 || m > 64)
        throw PreconditionViolated("kneser requires 1 <= k, 2k <= m <= 64");
    std::vector<std::uint64_t> subsets;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (auto i : idx)
            mask |= std::uint64_t{1} << i;
        subsets.push_back(mask);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    Graph g(subsets.size());
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0)
                g.add_edge(a, b);
    return g;
}

Graph mtt(std::size_t t)
{
    if (t == 0)
        throw PreconditionViolated("mtt requires t >= 1");
    Graph g(2 * t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (i != j)
                g.add_edge(i, t + j);
    return g;
}

BlowupResult blowup(const Graph& f, const std::vector<std::size_t>& sizes)
{
    if (sizes.size() != f.order())
        throw PreconditionViolated("blowup needs one class size per vertex");
    std::vector<std::size_t> start(f.order() + 1, 0);
    for (std::size_t i = 0; i < f.order(); ++i) {
        if (sizes[i] == 0)
            throw PreconditionViolated("blowup class sizes must be positive");
        start[i + 1] = start[i] + sizes[i];
    }
    BlowupResult result{Graph(start.back()), std::vector<Vertex>(start.back())};
    for (Vertex v = 0; v < f.order(); ++v)
        for (std::size_t c = start[v]; c < start[v + 1]; ++c)
            result.origin[c] = v;
    for (auto [u, v] : f.edges())
        for (std::size_t a = start[u]; a < start[u + 1]; ++a)
            for (std::size_t b = start[v]; b < start[v + 1]; ++b)
                result.graph.add_edge(a, b);
    return result;
}

Graph gamma_blowup(const Graph& gamma, std::size_t a, std::size_t b)
{
    const std::size_t t = gamma.order();
    if (a == 0 || b == 0)
        throw PreconditionViolated("gamma_blowup requires a, b >= 1");
    if (!is_maximal_kr_free(gamma, 3))
        throw PreconditionViolated("gamma_blowup requires a maximal triangle-free Gamma");
    // M_{t,t} joined with Gamma: x_i = i, y_i = t + i, z_i = 2t + i.
    Graph base(3 * t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j)
            if (i != j)
                base.add_edge(i, t + j);
        base.add_edge(i, 2 * t + i);
        base.add_edge(t + i, 2 * t + i);
    }
    for (auto [u, v] : gamma.edges())
        base.add_edge(2 * t + u, 2 * t + v);
    std::vector<std::size_t> sizes(3 * t, a);
    std::fill(sizes.begin() + static_cast<long>(2 * t), sizes.end(), b);
    return blowup(base, sizes).graph;
}

Graph ultra_vc_example(std::size_t n)
{
    if (n < 16 || n % 8 != 0)
        throw PreconditionViolated("ultra_vc_example requires n a multiple of 8 with n >= 16");
    return gamma_blowup(complete_bipartite(n / 8, n / 8), 1, 2);
}

HypercubeLowerBound hypercube_lb(std::size_t d, std::size_t d_copies)
{
    if (d == 0 || d > 20)
        throw PreconditionViolated("hypercube_lb requires 1 <= d <= 20");
    HypercubeLowerBound out;
    out.d = d;
    const std::uint64_t cube = std::uint64_t{1} << d;
    out.h = Graph(2 * d + cube);
    for (std::size_t i = 0; i < d; ++i)
        out.h.add_edge(HypercubeLowerBound::d_vertex(i, 0), HypercubeLowerBound::d_vertex(i, 1));
    for (std::uint64_t u = 0; u < cube; ++u) {
        std::uint64_t anti = (cube - 1) ^ u;
        if (u < anti)
            out.h.add_edge(out.q_vertex(u), out.q_vertex(anti));
        for (std::size_t i = 0; i < d; ++i)
            out.h.add_edge(out.q_vertex(u), HypercubeLowerBound::d_vertex(i, (u >> i) & 1));
    }
    out.copies = d_copies == 0 ? static_cast<std::size_t>(cube) : d_copies;
    std::vector<std::size_t> sizes(out.h.order(), 1);
    std::fill(sizes.begin(), sizes.begin() + static_cast<long>(2 * d), out.copies);
    auto blown = blowup(out.h, sizes);
    out.g = std::move(blown.graph);
    out.origin = std::move(blown.origin);
    return out;
}

Graph half_min(std::size_t k)
{
    if (k == 0)
        throw PreconditionViolated("half_min requires k >= 1");
    Graph g(2 * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            g.add_edge(i, k + j);
    return g;
}

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw PreconditionViolated("cycle requires n >= 3");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph complete(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph empty_graph(std::size_t n)
{
    return Graph(n);
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    Graph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

Graph petersen()
{
    return kneser(5, 2);
}

Graph random_maximal_triangle_free(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng() % i]);
    Graph g(n);
    for (auto [u, v] : pairs)
        if (!g.neighbors(u).intersects(g.neighbors(v)))
            g.add_edge(u, v);
    return g;
}

namespace {

std::int64_t require_int(const ConstructionSpec& spec, const std::string& key)
{
    auto it = spec.ints.find(key);
    if (it == spec.ints.end())
        throw PreconditionViolated("family '" + spec.family + "' needs parameter '" + key + "'");
    if (it->second < 0)
        throw PreconditionViolated("parameter '" + key + "' must be non-negative");
    return it->second;
}

std::size_t require_size(const ConstructionSpec& spec, const std::string& key)
{
    return static_cast<std::size_t>(require_int(spec, key));
}

const Graph& require_graph(const ConstructionSpec& spec, const std::string& key)
{
    auto it = spec.graphs.find(key);
    if (it == spec.graphs.end())
        throw PreconditionViolated("family '" + spec.family + "' needs graph parameter '" + key + "'");
    return it->second;
}

}  // namespace

Graph construct(const ConstructionSpec& spec)
{
    const auto& f = spec.family;
    if (f == "turan")
        return turan(require_size(spec, "n"), require_size(spec, "parts"));
    if (f == "kneser")
        return kneser(require_size(spec, "m"), require_size(spec, "k"));
    if (f == "mtt")
        return mtt(require_size(spec, "t"));
    if (f == "half_min")
        return half_min(require_size(spec, "k"));
    if (f == "gamma_blowup")
        return gamma_blowup(require_graph(spec, "gamma"), require_size(spec, "a"), require_size(spec, "b"));
    if (f == "ultra_vc_example")
        return ultra_vc_example(require_size(spec, "n"));
    if (f == "hypercube_lb") {
        auto lb = hypercube_lb(require_size(spec, "d"));
        auto which = spec.ints.find("h");
        return which != spec.ints.end() && which->second != 0 ? lb.h : lb.g;
    }
    if (f == "blowup") {
        const Graph& base = require_graph(spec, "graph");
        std::vector<std::size_t> sizes = spec.sizes;
        if (sizes.empty() && spec.ints.count("size"))
            sizes.assign(base.order(), require_size(spec, "size"));
        return blowup(base, sizes).graph;
    }
    if (f == "cycle")
        return cycle(require_size(spec, "n"));
    if (f == "path")
        return path(require_size(spec, "n"));
    if (f == "complete")
        return complete(require_size(spec, "n"));
    if (f == "empty")
        return empty_graph(require_size(spec, "n"));
    if (f == "complete_bipartite")
        return complete_bipartite(require_size(spec, "a"), require_size(spec, "b"));
    if (f == "petersen")
        return petersen();
    throw PreconditionViolated("unknown construction family '" + f + "'");
}

std::vector<Graph> connected_graph_catalog(std::size_t max_n)
{
    if (max_n > 9)
        throw PreconditionViolated("connected_graph_catalog supports max_n <= 9");
    std::vector<Graph> out;
    if (max_n == 0)
        return out;
    std::vector<Graph> level{Graph(1)};
    out.push_back(Graph(1));
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::map<std::uint64_t, Graph> next;
        for (const auto& base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                Graph g(n);
                for (auto [u, v] : base.edges())
                    g.add_edge(u, v);
                for (std::size_t u = 0; u + 1 < n; ++u)
                    if ((mask >> u) & 1)
                        g.add_edge(u, n - 1);
                auto code = canonical_code(g);
                if (!next.count(code))
                    next.emplace(code, std::move(g));
            }
        }
        level.clear();
        for (auto& [code, g] : next) {
            if (is_connected(g))
                out.push_back(g);
            level.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed)
{
    if (min_n > max_n)
        throw PreconditionViolated("random_graphs requires min_n <= max_n");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
        std::uint64_t density = 2 + rng() % 7;  // edge probability density/10
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 10 < density)
                    g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace ultrafree
