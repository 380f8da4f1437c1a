#include "ultrafree/setsystem.hpp"

#include "ultrafree/errors.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace ultrafree {

SetSystem::SetSystem(std::size_t ground_size, std::vector<Bitset> sets, std::vector<std::string> labels)
    : ground_(ground_size), sets_(std::move(sets)), labels_(std::move(labels))
{
    for (const auto& s : sets_)
        if (s.universe() != ground_)
            throw PreconditionViolated("SetSystem: set universe does not match ground size");
    if (!labels_.empty() && labels_.size() != sets_.size())
        throw PreconditionViolated("SetSystem: label count does not match set count");
}

SetSystem SetSystem::from_lists(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& sets,
                                std::vector<std::string> labels)
{
    std::vector<Bitset> bits;
    bits.reserve(sets.size());
    for (const auto& s : sets) {
        Bitset b(ground_size);
        for (auto e : s) {
            if (e >= ground_size)
                throw PreconditionViolated("SetSystem: element " + std::to_string(e) + " outside the ground set");
            b.set(e);
        }
        bits.push_back(std::move(b));
    }
    return SetSystem(ground_size, std::move(bits), std::move(labels));
}

Bitset SetSystem::containing(std::size_t e) const
{
    Bitset out(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].test(e))
            out.set(i);
    return out;
}

SetSystem dual(const SetSystem& f)
{
    std::vector<Bitset> sets;
    sets.reserve(f.ground_size());
    for (std::size_t e = 0; e < f.ground_size(); ++e)
        sets.push_back(f.containing(e));
    return SetSystem(f.size(), std::move(sets));
}

Graph disjointness_graph(const SetSystem& f)
{
    Graph g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!f[i].intersects(f[j]))
                g.add_edge(i, j);
    return g;
}

SetSystem mis_system(const Graph& g, const std::vector<VertexSet>& mis)
{
    std::vector<Bitset> sets(g.order(), Bitset(mis.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < mis.size(); ++i)
        for (auto v : mis[i])
            sets[v].set(i);
    for (Vertex v = 0; v < g.order(); ++v)
        labels.push_back("K_" + std::to_string(v));
    return SetSystem(mis.size(), std::move(sets), std::move(labels));
}

SetSystem mis_system(const Graph& g, const SearchBudget& budget)
{
    return mis_system(g, enumerate_mis(g, budget));
}

SetSystem neighborhood_system(const Graph& g)
{
    std::vector<Bitset> sets;
    std::vector<std::string> labels;
    for (Vertex v = 0; v < g.order(); ++v) {
        sets.push_back(g.neighbors(v));
        labels.push_back("N_" + std::to_string(v));
    }
    return SetSystem(g.order(), std::move(sets), std::move(labels));
}

bool is_transversal(const SetSystem& f, const VertexSet& points)
{
    Bitset p(f.ground_size());
    for (auto e : points) {
        if (e >= f.ground_size())
            return false;
        p.set(e);
    }
    return std::all_of(f.sets().begin(), f.sets().end(), [&](const Bitset& s) { return s.intersects(p); });
}

bool is_matching(const SetSystem& f, const std::vector<std::size_t>& indices)
{
    for (std::size_t a = 0; a < indices.size(); ++a) {
        if (indices[a] >= f.size())
            return false;
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            if (indices[a] == indices[b] || f[indices[a]].intersects(f[indices[b]]))
                return false;
    }
    return true;
}

namespace {

void require_nonempty_sets(const SetSystem& f, const char* what)
{
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].none())
            throw Infeasible(std::string(what) + ": set " + std::to_string(i) + " is empty");
}

class TransversalSearch {
public:
    TransversalSearch(const SetSystem& f, const SearchBudget& budget, std::size_t lower)
        : f_(f), tracker_(budget, "transversal_number"), lower_(lower)
    {
        for (std::size_t e = 0; e < f.ground_size(); ++e)
            hits_.push_back(f.containing(e));
        order_.resize(f.ground_size());
        for (std::size_t e = 0; e < order_.size(); ++e)
            order_[e] = e;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return hits_[a].count() > hits_[b].count(); });
    }

    VertexSet run()
    {
        best_ = greedy();
        if (best_.size() > lower_) {
            VertexSet chosen;
            recurse(chosen, Bitset::full(f_.size()), Bitset(f_.ground_size()));
        }
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    VertexSet greedy() const
    {
        VertexSet chosen;
        Bitset uncovered = Bitset::full(f_.size());
        while (uncovered.any()) {
            std::size_t pick = 0;
            std::size_t gain = 0;
            for (auto e : order_) {
                std::size_t g = hits_[e].intersection_count(uncovered);
                if (g > gain) {
                    gain = g;
                    pick = e;
                }
            }
            chosen.push_back(pick);
            uncovered -= hits_[pick];
        }
        return chosen;
    }

    // Pairwise disjoint uncovered sets, each needing its own element.
    std::size_t packing_bound(const Bitset& uncovered) const
    {
        std::size_t count = 0;
        Bitset used(f_.ground_size());
        uncovered.for_each([&](std::size_t i) {
            if (!f_[i].intersects(used)) {
                used |= f_[i];
                ++count;
            }
        });
        return count;
    }

    void recurse(VertexSet& chosen, const Bitset& uncovered, Bitset forbidden)
    {
        if (best_.size() <= lower_)
            return;
        tracker_.tick();
        if (uncovered.none()) {
            if (chosen.size() < best_.size())
                best_ = chosen;
            return;
        }
        if (chosen.size() + packing_bound(uncovered) >= best_.size())
            return;
        std::size_t branch = Bitset::npos;
        std::size_t fewest = 0;
        for (std::size_t i = uncovered.first(); i != Bitset::npos; i = uncovered.next(i + 1)) {
            std::size_t avail = f_[i].count() - f_[i].intersection_count(forbidden);
            if (avail == 0)
                return;
            if (branch == Bitset::npos || avail < fewest) {
                branch = i;
                fewest = avail;
            }
        }
        for (auto e : order_) {
            if (!f_[branch].test(e) || forbidden.test(e))
                continue;
            chosen.push_back(e);
            recurse(chosen, uncovered - hits_[e], forbidden);
            chosen.pop_back();
            forbidden.set(e);
            if (best_.size() <= lower_)
                return;
        }
    }

    const SetSystem& f_;
    BudgetTracker tracker_;
    std::size_t lower_;
    std::vector<Bitset> hits_;
    std::vector<std::size_t> order_;
    VertexSet best_;
};

std::vector<std::size_t> distinct_indices(const SetSystem& f)
{
    std::vector<std::size_t> keep;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (seen.insert(f[i]).second)
            keep.push_back(i);
    return keep;
}

}  // namespace

FractionalPair fractional_transversal(const SetSystem& f)
{
    require_nonempty_sets(f, "fractional_transversal");
    // Packing LP over sets: max sum y_A s.t. sum_{A ni e} y_A <= 1. Its dual is the transversal LP.
    std::vector<std::vector<Rational>> a(f.ground_size(), std::vector<Rational>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i].for_each([&](std::size_t e) { a[e][i] = 1; });
    std::vector<Rational> b(f.ground_size(), Rational(1));
    std::vector<Rational> c(f.size(), Rational(1));
    LpSolution lp = solve_lp_max(a, b, c);
    FractionalPair out;
    out.matching = {lp.primal, lp.value};
    out.transversal = {lp.dual, lp.value};
    return out;
}

TransversalResult transversal_number(const SetSystem& f, const SearchBudget& budget)
{
    require_nonempty_sets(f, "transversal_number");
    if (f.size() == 0)
        return {0, {}};
    BigInt lp_bound = ceil(fractional_transversal(f).transversal.value);
    TransversalSearch search(f, budget, static_cast<std::size_t>(lp_bound));
    VertexSet witness = search.run();
    if (!is_transversal(f, witness))
        throw InternalContradiction("transversal_number: witness misses a set");
    return {witness.size(), witness};
}

MatchingResult matching_number(const SetSystem& f, const SearchBudget& budget)
{
    VertexSet clique = max_clique(disjointness_graph(f), budget);
    return {clique.size(), clique};
}

VcResult vc_dimension(const SetSystem& f, const SearchBudget& budget)
{
    BudgetTracker tracker(budget, "vc_dimension");
    auto keep = distinct_indices(f);
    if (keep.empty())
        return {0, {}};
    // Elements with identical membership columns are interchangeable; elements in all or none of
    // the sets cannot be shattered even alone.
    std::vector<std::size_t> reps;
    std::unordered_set<Bitset, BitsetHash> columns;
    for (std::size_t e = 0; e < f.ground_size(); ++e) {
        Bitset col(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (f[keep[i]].test(e))
                col.set(i);
        std::size_t c = col.count();
        if (c == 0 || c == keep.size())
            continue;
        if (columns.insert(col).second)
            reps.push_back(e);
    }

    auto shattered = [&](const VertexSet& s) {
        std::vector<char> seen(std::size_t{1} << s.size(), 0);
        std::size_t distinct = 0;
        for (auto i : keep) {
            std::size_t mask = 0;
            for (std::size_t p = 0; p < s.size(); ++p)
                if (f[i].test(s[p]))
                    mask |= std::size_t{1} << p;
            if (!seen[mask]) {
                seen[mask] = 1;
                if (++distinct == seen.size())
                    return true;
            }
        }
        return false;
    };

    std::vector<VertexSet> level;
    for (auto e : reps)
        level.push_back({e});
    if (level.empty())
        return {0, {}};
    VcResult best{1, level.front()};
    std::size_t k = 1;
    while (!level.empty() && (std::size_t{1} << (k + 1)) <= keep.size()) {
        std::set<VertexSet> known(level.begin(), level.end());
        std::vector<VertexSet> next;
        for (const auto& s : level) {
            for (auto e : reps) {
                if (e <= s.back())
                    continue;
                tracker.tick();
                VertexSet cand = s;
                cand.push_back(e);
                bool closed = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
                    VertexSet sub;
                    for (std::size_t p = 0; p < cand.size(); ++p)
                        if (p != drop)
                            sub.push_back(cand[p]);
                    closed = known.count(sub) > 0;
                }
                if (closed && shattered(cand))
                    next.push_back(std::move(cand));
            }
        }
        if (next.empty())
            break;
        ++k;
        best = {k, next.front()};
        level = std::move(next);
    }
    return best;
}

std::size_t helly_number(const SetSystem& f, const SearchBudget& budget)
{
    if (f.size() == 0)
        return 0;
    BudgetTracker tracker(budget, "helly_number");
    auto keep = distinct_indices(f);
    std::vector<Bitset> sets;
    for (auto i : keep)
        sets.push_back(f[i]);
    const std::size_t m = sets.size();
    std::size_t best = 0;
    std::vector<std::size_t> chosen;

    // Does chosen + {j} form a minimal non-intersecting family, given that chosen intersects?
    auto minimal_with = [&](std::size_t j) {
        const std::size_t k = chosen.size();
        std::vector<Bitset> prefix(k + 1, Bitset::full(f.ground_size()));
        std::vector<Bitset> suffix(k + 1, sets[j]);
        for (std::size_t p = 0; p < k; ++p)
            prefix[p + 1] = prefix[p] & sets[chosen[p]];
        for (std::size_t p = k; p > 0; --p)
            suffix[p - 1] = suffix[p] & sets[chosen[p - 1]];
        for (std::size_t p = 0; p < k; ++p)
            if (!prefix[p].intersects(suffix[p + 1]))
                return false;
        return true;
    };

    std::function<void(std::size_t, const Bitset&)> recurse = [&](std::size_t from, const Bitset& inter) {
        for (std::size_t j = from; j < m; ++j) {
            tracker.tick();
            Bitset next = inter & sets[j];
            if (next.none()) {
                if (chosen.size() + 1 > best && minimal_with(j))
                    best = chosen.size() + 1;
            } else {
                chosen.push_back(j);
                recurse(j + 1, next);
                chosen.pop_back();
            }
        }
    };
    recurse(0, Bitset::full(f.ground_size()));
    return best == 0 ? 1 : best;
}

bool has_pq_property(const SetSystem& f, std::size_t p, std::size_t q)
{
    if (q < 2 || p < q)
        throw PreconditionViolated("has_pq_property requires p >= q >= 2");
    if (p > f.size())
        return true;
    std::vector<std::size_t> tuple;

    // Some (q-1)-subset of the tuple meets `with` in a common point.
    std::function<bool(std::size_t, std::size_t, const Bitset&)> completes =
        [&](std::size_t from, std::size_t need, const Bitset& with) {
            if (need == 0)
                return true;
            for (std::size_t a = from; a + need <= tuple.size(); ++a) {
                Bitset next = with & f[tuple[a]];
                if (next.any() && completes(a + 1, need - 1, next))
                    return true;
            }
            return false;
        };

    std::function<bool(std::size_t)> find_bad = [&](std::size_t from) {
        if (tuple.size() == p)
            return true;
        for (std::size_t j = from; j + (p - tuple.size()) <= f.size(); ++j) {
            if (f[j].any() && completes(0, q - 1, f[j]))
                continue;
            tuple.push_back(j);
            if (find_bad(j + 1))
                return true;
            tuple.pop_back();
        }
        return false;
    };
    return !find_bad(0);
}

FracHellyWitness frac_helly_witness(const SetSystem& f, std::size_t k)
{
    if (k < 2 || f.size() < k)
        throw PreconditionViolated("frac_helly_witness requires k >= 2 and at least k sets");
    BigInt intersecting = 0;
    std::function<void(std::size_t, std::size_t, const Bitset&)> count =
        [&](std::size_t from, std::size_t need, const Bitset& inter) {
            if (need == 0) {
                ++intersecting;
                return;
            }
            for (std::size_t j = from; j + need <= f.size(); ++j) {
                Bitset next = inter & f[j];
                if (next.any())
                    count(j + 1, need - 1, next);
            }
        };
    count(0, k, Bitset::full(f.ground_size()));
    std::size_t best = 0;
    for (std::size_t e = 0; e < f.ground_size(); ++e)
        best = std::max(best, f.containing(e).count());
    const auto m = static_cast<std::uint64_t>(f.size());
    return {Rational(intersecting, binomial(m, k)), Rational(BigInt(best), BigInt(m))};
}

}  // namespace ultrafree
