#include "ultrafree/graph_algorithms.hpp"

#include "ultrafree/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ultrafree {

namespace {

std::uint64_t count_cliques_in(const Graph& g, Bitset candidates, std::size_t depth)
{
    if (depth == 1)
        return candidates.count();
    std::uint64_t total = 0;
    for (auto v = candidates.first(); v != Bitset::npos; v = candidates.next(v + 1)) {
        candidates.reset(v);
        Bitset next = candidates & g.neighbors(v);
        if (next.count() + 1 >= depth)
            total += count_cliques_in(g, std::move(next), depth - 1);
    }
    return total;
}

void for_each_clique_in(const Graph& g, Bitset candidates, std::size_t depth, VertexSet& current,
                        const std::function<void(const VertexSet&)>& f)
{
    if (depth == 0) {
        f(current);
        return;
    }
    for (auto v = candidates.first(); v != Bitset::npos; v = candidates.next(v + 1)) {
        candidates.reset(v);
        Bitset next = candidates & g.neighbors(v);
        if (next.count() + 1 < depth)
            continue;
        current.push_back(v);
        for_each_clique_in(g, std::move(next), depth - 1, current, f);
        current.pop_back();
    }
}

class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, const SearchBudget& budget) : g_(g), budget_(budget, "max_clique") {}

    VertexSet run()
    {
        VertexSet current;
        expand(current, g_.all_vertices());
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy colour classes over P; returns vertices in colour order with their colour numbers.
    void colour_order(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bounds) const
    {
        Bitset uncoloured = p;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset q = uncoloured;
            while (q.any()) {
                Vertex v = q.first();
                q.reset(v);
                q -= g_.neighbors(v);
                uncoloured.reset(v);
                order.push_back(v);
                bounds.push_back(colour);
            }
        }
    }

    void expand(VertexSet& current, Bitset p)
    {
        budget_.tick();
        std::vector<Vertex> order;
        std::vector<std::size_t> bounds;
        colour_order(p, order, bounds);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bounds[i] <= best_.size())
                return;
            Vertex v = order[i];
            current.push_back(v);
            Bitset next = p & g_.neighbors(v);
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            }
            else {
                expand(current, std::move(next));
            }
            current.pop_back();
            p.reset(v);
        }
    }

    const Graph& g_;
    BudgetTracker budget_;
    VertexSet best_;
};

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const SearchBudget& budget)
        : g_(g), n_(g.order()), budget_(budget, "chromatic_number"), colour_(n_, npos),
          neighbour_colour_count_(n_, std::vector<std::size_t>(n_ + 1, 0)), saturation_(n_, 0)
    {
    }

    std::vector<std::size_t> run()
    {
        if (n_ == 0)
            return {};
        lower_bound_ = max_clique(g_).size();
        best_ = greedy_dsatur();
        best_count_ = 1 + *std::max_element(best_.begin(), best_.end());
        if (best_count_ > lower_bound_)
            search(0, 0);
        return best_;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Vertex pick() const
    {
        Vertex chosen = npos;
        std::size_t best_sat = 0, best_deg = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] != npos)
                continue;
            std::size_t deg = 0;
            g_.neighbors(v).for_each([&](std::size_t w) {
                if (colour_[w] == npos)
                    ++deg;
            });
            if (chosen == npos || saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
                chosen = v;
                best_sat = saturation_[v];
                best_deg = deg;
            }
        }
        return chosen;
    }

    void assign(Vertex v, std::size_t c)
    {
        colour_[v] = c;
        g_.neighbors(v).for_each([&](std::size_t w) {
            if (neighbour_colour_count_[w][c]++ == 0)
                ++saturation_[w];
        });
    }

    void unassign(Vertex v)
    {
        std::size_t c = colour_[v];
        colour_[v] = npos;
        g_.neighbors(v).for_each([&](std::size_t w) {
            if (--neighbour_colour_count_[w][c] == 0)
                --saturation_[w];
        });
    }

    std::vector<std::size_t> greedy_dsatur()
    {
        std::vector<std::size_t> result(n_);
        for (std::size_t step = 0; step < n_; ++step) {
            Vertex v = pick();
            std::size_t c = 0;
            while (neighbour_colour_count_[v][c] > 0)
                ++c;
            assign(v, c);
        }
        result = colour_;
        for (Vertex v = 0; v < n_; ++v)
            unassign(v);
        return result;
    }

    void search(std::size_t coloured, std::size_t used)
    {
        budget_.tick();
        if (coloured == n_) {
            best_ = colour_;
            best_count_ = used;
            return;
        }
        Vertex v = pick();
        for (std::size_t c = 0; c < used && used < best_count_; ++c) {
            if (neighbour_colour_count_[v][c] > 0)
                continue;
            assign(v, c);
            search(coloured + 1, used);
            unassign(v);
            if (best_count_ == lower_bound_)
                return;
        }
        if (used + 1 < best_count_) {
            assign(v, used);
            search(coloured + 1, used + 1);
            unassign(v);
        }
    }

    const Graph& g_;
    std::size_t n_;
    BudgetTracker budget_;
    std::vector<std::size_t> colour_;
    std::vector<std::vector<std::size_t>> neighbour_colour_count_;
    std::vector<std::size_t> saturation_;
    std::vector<std::size_t> best_;
    std::size_t best_count_ = 0;
    std::size_t lower_bound_ = 0;
};

void bron_kerbosch_independent(const Graph& g, const std::vector<Bitset>& non_adj, VertexSet& r, Bitset p, Bitset x,
                               std::vector<VertexSet>& out, BudgetTracker& budget)
{
    budget.tick();
    if (p.none() && x.none()) {
        VertexSet sorted = r;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        return;
    }
    Vertex pivot = (p | x).first();
    Bitset candidates = p - non_adj[pivot];
    for (auto v = candidates.first(); v != Bitset::npos; v = candidates.next(v + 1)) {
        r.push_back(v);
        bron_kerbosch_independent(g, non_adj, r, p & non_adj[v], x & non_adj[v], out, budget);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

void independent_sets_rec(const Graph& g, std::size_t a, VertexSet& chosen, const Bitset& candidates,
                          const Bitset& common, const std::function<void(const VertexSet&, const Bitset&)>& f)
{
    if (chosen.size() == a) {
        f(chosen, common);
        return;
    }
    for (auto v = candidates.first(); v != Bitset::npos; v = candidates.next(v + 1)) {
        Bitset next = candidates - g.neighbors(v);
        // restrict to vertices after v
        for (auto w = next.first(); w != Bitset::npos && w <= v; w = next.next(w + 1))
            next.reset(w);
        if (next.count() + chosen.size() + 1 < a)
            continue;
        chosen.push_back(v);
        independent_sets_rec(g, a, chosen, next, common & g.neighbors(v), f);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_clique(const Graph& g, std::size_t b, const Bitset& within,
                     const std::function<void(const VertexSet&)>& f)
{
    if (b == 0)
        throw PreconditionViolated("for_each_clique requires b >= 1");
    VertexSet current;
    for_each_clique_in(g, within, b, current, f);
}

std::uint64_t count_cliques(const Graph& g, std::size_t b, const std::optional<Bitset>& within)
{
    if (b == 0)
        throw PreconditionViolated("count_cliques requires b >= 1");
    Bitset candidates = within ? *within : g.all_vertices();
    if (candidates.count() < b)
        return 0;
    return count_cliques_in(g, std::move(candidates), b);
}

VertexSet max_clique(const Graph& g, const SearchBudget& budget)
{
    if (g.order() == 0)
        return {};
    return MaxCliqueSearch(g, budget).run();
}

std::size_t clique_number(const Graph& g)
{
    return max_clique(g).size();
}

std::vector<std::size_t> optimal_coloring(const Graph& g, const SearchBudget& budget)
{
    return ColoringSearch(g, budget).run();
}

std::size_t chromatic_number(const Graph& g, const SearchBudget& budget)
{
    auto colouring = optimal_coloring(g, budget);
    if (colouring.empty())
        return 0;
    return 1 + *std::max_element(colouring.begin(), colouring.end());
}

std::vector<VertexSet> enumerate_mis(const Graph& g, const SearchBudget& budget)
{
    BudgetTracker tracker(budget, "enumerate_mis");
    std::vector<Bitset> non_adj;
    non_adj.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        Bitset b = g.neighbors(v).complement();
        b.reset(v);
        non_adj.push_back(std::move(b));
    }
    std::vector<VertexSet> out;
    VertexSet r;
    bron_kerbosch_independent(g, non_adj, r, g.all_vertices(), Bitset(g.order()), out, tracker);
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_independent_set(const Graph& g, std::size_t a,
                              const std::function<void(const VertexSet&, const Bitset&)>& f)
{
    VertexSet chosen;
    independent_sets_rec(g, a, chosen, g.all_vertices(), g.all_vertices(), f);
}

std::optional<std::size_t> codegree_min(const Graph& g, std::size_t a)
{
    if (a == 0)
        throw PreconditionViolated("codegree_min requires a >= 1");
    std::optional<std::size_t> best;
    for_each_independent_set(g, a, [&](const VertexSet&, const Bitset& common) {
        std::size_t c = common.count();
        if (!best || c < *best)
            best = c;
    });
    return best;
}

std::optional<Rational> clique_codensity(const Graph& g, std::size_t a, std::size_t b)
{
    if (a == 0 || b < 2)
        throw PreconditionViolated("clique_codensity requires a >= 1 and b >= 2");
    std::optional<Rational> best;
    for_each_independent_set(g, a, [&](const VertexSet&, const Bitset& common) {
        std::size_t size = common.count();
        Rational density = 0;
        if (size >= b)
            density = Rational(BigInt(count_cliques(g, b, common)), binomial(size, b));
        if (!best || density < *best)
            best = density;
    });
    return best;
}

Rational pi_density(std::size_t s, std::size_t t)
{
    if (s < 2 || s > t)
        throw PreconditionViolated("pi_density requires 2 <= s <= t");
    Rational product = 1;
    for (std::size_t i = 1; i < s; ++i)
        product *= Rational(static_cast<long long>(t - 1 - i), static_cast<long long>(t - 1));
    return product;
}

std::optional<P4Link> has_induced_p4(const Graph& g, Vertex u, Vertex v)
{
    if (u == v)
        throw PreconditionViolated("has_induced_p4 requires distinct endpoints");
    if (g.adjacent(u, v))
        return std::nullopt;
    Bitset ys = g.neighbors(u) - g.neighbors(v);
    ys.reset(v);
    for (auto y = ys.first(); y != Bitset::npos; y = ys.next(y + 1)) {
        Bitset zs = (g.neighbors(y) & g.neighbors(v)) - g.neighbors(u);
        zs.reset(u);
        auto z = zs.first();
        if (z != Bitset::npos)
            return P4Link{y, z};
    }
    return std::nullopt;
}

bool is_induced_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d)
{
    std::array<Vertex, 4> vs{a, b, c, d};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (vs[i] == vs[j] || vs[i] >= g.order() || vs[j] >= g.order())
                return false;
            if (g.adjacent(vs[i], vs[j]) != (j == i + 1))
                return false;
        }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_kr_free(const Graph& g, std::size_t r)
{
    if (r == 0)
        return false;
    return count_cliques(g, r) == 0;
}

bool is_maximal_kr_free(const Graph& g, std::size_t r)
{
    if (!is_kr_free(g, r))
        return false;
    if (r <= 2)
        return true;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v))
                continue;
            if (r == 3) {
                if (!g.neighbors(u).intersects(g.neighbors(v)))
                    return false;
            }
            else if (count_cliques(g, r - 2, g.common_neighbors(u, v)) == 0) {
                return false;
            }
        }
    return true;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    Bitset seen(g.order()), frontier(g.order());
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        Bitset next(g.order());
        frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen.count() == g.order();
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& order, std::size_t depth,
                        std::vector<Vertex>& map, std::vector<bool>& used)
{
    if (depth == order.size())
        return true;
    Vertex v = order[depth];
    for (Vertex w = 0; w < b.order(); ++w) {
        if (used[w] || a.degree(v) != b.degree(w))
            continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            Vertex u = order[k];
            ok = a.adjacent(u, v) == b.adjacent(map[u], w);
        }
        if (!ok)
            continue;
        map[v] = w;
        used[w] = true;
        if (extend_isomorphism(a, b, order, depth + 1, map, used))
            return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return std::nullopt;
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return std::nullopt;

    // Order: each next vertex maximises connections to already-ordered ones, then degree.
    std::vector<Vertex> order;
    std::vector<bool> placed(a.order(), false);
    for (std::size_t step = 0; step < a.order(); ++step) {
        Vertex best = 0;
        std::size_t best_links = 0, best_deg = 0;
        bool found = false;
        for (Vertex v = 0; v < a.order(); ++v) {
            if (placed[v])
                continue;
            std::size_t links = 0;
            for (auto u : order)
                links += a.adjacent(u, v) ? 1 : 0;
            if (!found || links > best_links || (links == best_links && a.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = a.degree(v);
                found = true;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    std::vector<Vertex> map(a.order(), 0);
    std::vector<bool> used(b.order(), false);
    if (!extend_isomorphism(a, b, order, 0, map, used))
        return std::nullopt;
    return map;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    return find_isomorphism(a, b).has_value();
}

std::uint64_t canonical_code(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > 11)
        throw PreconditionViolated("canonical_code supports at most 11 vertices");
    // Invariant per vertex: (degree, sorted neighbour degrees).
    std::vector<std::vector<std::size_t>> invariant(n);
    for (Vertex v = 0; v < n; ++v) {
        invariant[v].push_back(g.degree(v));
        std::vector<std::size_t> nd;
        g.neighbors(v).for_each([&](std::size_t w) { nd.push_back(g.degree(w)); });
        std::sort(nd.begin(), nd.end());
        invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Vertex x, Vertex y) {
        if (invariant[x] != invariant[y])
            return invariant[x] < invariant[y];
        return x < y;
    });
    // Cells of equal invariant; permute within cells.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && invariant[perm[j]] == invariant[perm[i]])
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    auto code_of = [&](const std::vector<Vertex>& p) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                code = (code << 1) | (g.adjacent(p[i], p[j]) ? 1u : 0u);
        return code;
    };
    std::uint64_t best = code_of(perm);
    // Odometer over per-cell permutations.
    std::function<void(std::size_t)> rec = [&](std::size_t cell) {
        if (cell == cells.size()) {
            best = std::max(best, code_of(perm));
            return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
        do {
            rec(cell + 1);
        } while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
    };
    rec(0);
    return best;
}

}  // namespace ultrafree
