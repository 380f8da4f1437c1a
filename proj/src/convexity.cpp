#include "ultrafree/convexity.hpp"

#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace ultrafree {

std::string to_string(SpaceKind k)
{
    switch (k) {
    case SpaceKind::from_graph:
        return "from_graph";
    case SpaceKind::subcubes:
        return "subcubes";
    case SpaceKind::explicit_space:
        return "explicit";
    }
    return "unknown";
}

ConvexitySpace ConvexitySpace::from_graph(const Graph& g, const SearchBudget& budget)
{
    auto mis = enumerate_mis(g, budget);
    ConvexitySpace s(SpaceKind::from_graph, mis_system(g, mis));
    s.graph_ = g;
    s.mis_ = std::move(mis);
    return s;
}

ConvexitySpace ConvexitySpace::subcubes(std::size_t n)
{
    if (n == 0 || n > 16)
        throw PreconditionViolated("subcube space requires 1 <= n <= 16");
    const std::size_t points = std::size_t{1} << n;
    std::vector<Bitset> gens;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < 2; ++b) {
            Bitset h(points);
            for (std::size_t p = 0; p < points; ++p)
                if (((p >> i) & 1) == b)
                    h.set(p);
            gens.push_back(std::move(h));
            labels.push_back("x" + std::to_string(i) + "=" + std::to_string(b));
        }
    ConvexitySpace s(SpaceKind::subcubes, SetSystem(points, std::move(gens), std::move(labels)));
    s.cube_dim_ = n;
    return s;
}

ConvexitySpace ConvexitySpace::explicit_space(const SetSystem& generators)
{
    return ConvexitySpace(SpaceKind::explicit_space, generators);
}

const Graph& ConvexitySpace::graph() const
{
    if (!graph_)
        throw PreconditionViolated("space was not built from a graph");
    return *graph_;
}

std::string ConvexitySpace::point_label(std::size_t p) const
{
    if (kind_ == SpaceKind::from_graph) {
        std::string out = "{";
        for (std::size_t i = 0; i < mis_[p].size(); ++i)
            out += (i ? "," : "") + std::to_string(mis_[p][i]);
        return out + "}";
    }
    if (kind_ == SpaceKind::subcubes) {
        std::string out;
        for (std::size_t i = 0; i < cube_dim_; ++i)
            out += ((p >> i) & 1) ? '1' : '0';
        return out;
    }
    return std::to_string(p);
}

Bitset ConvexitySpace::hull(const Bitset& y) const
{
    if (y.none())
        return Bitset(size());
    Bitset out = Bitset::full(size());
    for (const auto& g : generators_.sets())
        if (y.is_subset_of(g))
            out &= g;
    return out;
}

Bitset ConvexitySpace::hull(const std::vector<std::size_t>& y) const
{
    return hull(Bitset::from_range(size(), y));
}

std::vector<Bitset> ConvexitySpace::convex_sets(const SearchBudget& budget) const
{
    BudgetTracker tracker(budget, "convex_sets");
    std::vector<Bitset> out{Bitset::full(size()), Bitset(size())};
    std::unordered_set<Bitset, BitsetHash> seen(out.begin(), out.end());
    std::deque<Bitset> queue;
    for (const auto& g : generators_.sets())
        if (seen.insert(g).second) {
            out.push_back(g);
            queue.push_back(g);
        }
    while (!queue.empty()) {
        Bitset c = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators_.sets()) {
            tracker.tick();
            Bitset next = c & g;
            if (seen.insert(next).second) {
                out.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return out;
}

namespace {

// Common vertices of the chosen maximal independent sets.
Bitset common_vertices(const ConvexitySpace& s, const std::vector<std::size_t>& points)
{
    Bitset out = Bitset::full(s.graph().order());
    for (auto p : points)
        out &= Bitset::from_range(s.graph().order(), s.mis()[p]);
    return out;
}

bool no_edges_between(const Graph& g, const Bitset& a, const Bitset& b)
{
    for (auto u = a.first(); u != Bitset::npos; u = a.next(u + 1))
        if (g.neighbors(u).intersects(b))
            return false;
    return true;
}

}  // namespace

std::optional<RadonPartition> radon_partition(const ConvexitySpace& s, const std::vector<std::size_t>& y)
{
    const std::size_t m = y.size();
    if (m < 2)
        throw PreconditionViolated("radon_partition needs at least two points");
    if (m > 30)
        throw PreconditionViolated("radon_partition supports at most 30 points");
    for (auto p : y)
        if (p >= s.size())
            throw PreconditionViolated("radon_partition: point out of range");
    const bool graph_space = s.kind() == SpaceKind::from_graph;
    std::optional<RadonPartition> found;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
        RadonPartition part;
        for (std::size_t i = 0; i < m; ++i)
            ((mask >> i) & 1 ? part.first : part.second).push_back(y[i]);
        bool meets = s.hull(part.first).intersects(s.hull(part.second));
        if (graph_space) {
            bool edgeless = no_edges_between(s.graph(), common_vertices(s, part.first),
                                             common_vertices(s, part.second));
            if (edgeless != meets)
                throw ClaimViolation("radon_partition: hull intersection disagrees with e(A, B) = 0");
        }
        if (meets) {
            found = std::move(part);
            break;
        }
    }
    return found;
}

std::optional<std::size_t> radon_number(const ConvexitySpace& s, std::size_t cap, const SearchBudget& budget)
{
    if (cap > s.size() + 1)
        throw PreconditionViolated("radon_number: cap exceeds the number of points plus one");
    BudgetTracker tracker(budget, "radon_number");
    const std::size_t n = s.size();
    for (std::size_t r = 2; r <= cap; ++r) {
        if (r > n)
            return r;
        std::vector<std::size_t> idx(r);
        for (std::size_t i = 0; i < r; ++i)
            idx[i] = i;
        bool all = true;
        while (all) {
            tracker.tick();
            if (!radon_partition(s, idx))
                all = false;
            std::size_t i = r;
            while (i > 0 && idx[i - 1] == n - r + (i - 1))
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < r; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (all)
            return r;
    }
    return std::nullopt;
}

namespace {

// Largest set in a hereditary family over points 0..n-1, found level by level.
template <typename Pred>
std::size_t largest_hereditary(std::size_t n, BudgetTracker& tracker, Pred&& member)
{
    if (n == 0)
        return 0;
    std::vector<std::vector<std::size_t>> level;
    for (std::size_t p = 0; p < n; ++p)
        if (member(std::vector<std::size_t>{p}))
            level.push_back({p});
    std::size_t best = level.empty() ? 0 : 1;
    while (!level.empty()) {
        std::set<std::vector<std::size_t>> known(level.begin(), level.end());
        std::vector<std::vector<std::size_t>> next;
        for (const auto& y : level)
            for (std::size_t p = y.back() + 1; p < n; ++p) {
                tracker.tick();
                auto cand = y;
                cand.push_back(p);
                bool closed = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
                    std::vector<std::size_t> sub;
                    for (std::size_t i = 0; i < cand.size(); ++i)
                        if (i != drop)
                            sub.push_back(cand[i]);
                    closed = known.count(sub) > 0;
                }
                if (closed && member(cand))
                    next.push_back(std::move(cand));
            }
        if (!next.empty())
            best = next.front().size();
        level = std::move(next);
    }
    return best;
}

}  // namespace

std::size_t radon_independence(const ConvexitySpace& s, const SearchBudget& budget)
{
    BudgetTracker tracker(budget, "radon_independence");
    return largest_hereditary(s.size(), tracker, [&](const std::vector<std::size_t>& y) {
        return y.size() < 2 || !radon_partition(s, y);
    });
}

std::size_t space_helly_number(const ConvexitySpace& s, const SearchBudget& budget)
{
    BudgetTracker tracker(budget, "space_helly_number");
    return largest_hereditary(s.size(), tracker, [&](const std::vector<std::size_t>& y) {
        Bitset common = Bitset::full(s.size());
        for (std::size_t drop = 0; drop < y.size() && common.any(); ++drop) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < y.size(); ++i)
                if (i != drop)
                    rest.push_back(y[i]);
            common &= s.hull(rest);
        }
        return common.none();
    });
}

Measure Measure::uniform(std::size_t points)
{
    if (points == 0)
        throw PreconditionViolated("uniform measure needs at least one point");
    return {std::vector<Rational>(points, Rational(BigInt(1), BigInt(points)))};
}

void Measure::validate(std::size_t points) const
{
    if (weights.size() != points)
        throw PreconditionViolated("measure has " + std::to_string(weights.size()) + " weights for " +
                                   std::to_string(points) + " points");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0)
            throw PreconditionViolated("measure weights must be non-negative");
        total += w;
    }
    if (total != 1)
        throw PreconditionViolated("measure weights sum to " + ultrafree::to_string(total) + ", not 1");
}

Rational Measure::of(const Bitset& c) const
{
    Rational total = 0;
    c.for_each([&](std::size_t p) { total += weights[p]; });
    return total;
}

std::vector<std::size_t> weak_eps_net(const ConvexitySpace& s, const Measure& mu, const Rational& eps,
                                      const SearchBudget& budget)
{
    if (eps <= 0)
        throw PreconditionViolated("weak_eps_net requires eps > 0");
    mu.validate(s.size());
    std::vector<Bitset> heavy;
    for (auto& c : s.convex_sets(budget))
        if (mu.of(c) >= eps)
            heavy.push_back(std::move(c));
    std::vector<std::size_t> net;
    std::vector<char> hit(heavy.size(), 0);
    std::size_t remaining = heavy.size();
    while (remaining > 0) {
        std::size_t pick = 0;
        std::size_t gain = 0;
        for (std::size_t p = 0; p < s.size(); ++p) {
            std::size_t g = 0;
            for (std::size_t i = 0; i < heavy.size(); ++i)
                g += !hit[i] && heavy[i].test(p);
            if (g > gain) {
                gain = g;
                pick = p;
            }
        }
        if (gain == 0)
            throw InternalContradiction("weak_eps_net: a heavy convex set is empty");
        net.push_back(pick);
        for (std::size_t i = 0; i < heavy.size(); ++i)
            if (!hit[i] && heavy[i].test(pick)) {
                hit[i] = 1;
                --remaining;
            }
    }
    std::sort(net.begin(), net.end());
    return net;
}

Report verify_table1(const Graph& g, std::size_t r, const SearchBudget& budget)
{
    Report report;
    const auto mis = enumerate_mis(g, budget);
    const SetSystem b = mis_system(g, mis);
    const std::size_t n = g.order();

    if (n == 0) {
        report.skip("chi_equals_tau", "empty graph");
    } else {
        auto coloring = optimal_coloring(g, budget);
        std::size_t chi = coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
        auto tau = transversal_number(b, budget);
        report.add("chi_equals_tau", chi == tau.size, {{"chi", chi}, {"tau", tau.size}},
                   {{"coloring", coloring}, {"transversal", tau.witness}}, "chi(G) = tau(B(G))");
    }

    auto omega = max_clique(g, budget);
    auto nu = matching_number(b, budget);
    report.add("omega_equals_nu", omega.size() == nu.size, {{"omega", omega.size()}, {"nu", nu.size}},
               {{"clique", omega}, {"matching", nu.witness}}, "omega(G) = nu(B(G))");

    nlohmann::json bad_pair = nullptr;
    for (Vertex u = 0; u < n && bad_pair.is_null(); ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) == b[u].intersects(b[v])) {
                bad_pair = {u, v};
                break;
            }
    report.add("edge_iff_disjoint", bad_pair.is_null(), nullptr, bad_pair,
               "uv is an edge iff K_u and K_v are disjoint");

    report.add("disjointness_graph_identity", disjointness_graph(b) == g, nullptr, nullptr,
               "G equals D(B(G)) under K_v -> v");

    bool kr_free = is_kr_free(g, r);
    bool pq = has_pq_property(b, r, 2);
    report.add("kr_free_iff_r2_property", kr_free == pq, {{"r", r}, {"kr_free", kr_free}, {"r2_property", pq}},
               kr_free ? nlohmann::json(nullptr) : nlohmann::json(max_clique(g, budget)),
               "G is K_r-free iff B(G) has the (r,2)-property");

    // The intersecting subfamilies of B(G) are the subfamilies of the traces {v : p in K_v}.
    std::vector<VertexSet> traces;
    for (std::size_t p = 0; p < b.ground_size(); ++p)
        traces.push_back(b.containing(p).members());
    std::vector<VertexSet> maximal;
    for (const auto& t : traces) {
        bool dominated = false;
        for (const auto& o : traces)
            if (o != t && std::includes(o.begin(), o.end(), t.begin(), t.end()))
                dominated = true;
        if (!dominated)
            maximal.push_back(t);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    report.add("mis_iff_maximal_intersecting", maximal == mis, {{"mis_count", mis.size()}}, nullptr,
               "maximal independent sets are the maximal intersecting subfamilies of B(G)");

    if (g.edge_count() == 0) {
        report.skip("helly_number_two", "graph has no edges");
    } else {
        std::size_t h = helly_number(b, budget);
        report.add("helly_number_two", h == 2, {{"helly", h}}, nullptr, "B(G) has Helly number 2");
    }
    return report;
}

}  // namespace ultrafree
