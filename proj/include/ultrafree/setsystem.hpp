#pragma once

#include "ultrafree/bitset.hpp"
#include "ultrafree/budget.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/rational.hpp"

#include <string>
#include <vector>

namespace ultrafree {

/// Indexed family of subsets of {0, ..., ground_size-1}. Duplicates are kept and order matters.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(std::size_t ground_size, std::vector<Bitset> sets, std::vector<std::string> labels = {});

    static SetSystem from_lists(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& sets,
                                std::vector<std::string> labels = {});

    std::size_t ground_size() const { return ground_; }
    std::size_t size() const { return sets_.size(); }
    const Bitset& operator[](std::size_t i) const { return sets_[i]; }
    const std::vector<Bitset>& sets() const { return sets_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Indices of the sets containing element e.
    Bitset containing(std::size_t e) const;

    friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
    std::size_t ground_ = 0;
    std::vector<Bitset> sets_;
    std::vector<std::string> labels_;
};

struct FractionalSolution {
    std::vector<Rational> weights;
    Rational value;
};

/// Optimal fractional transversal (weights on ground elements) and fractional matching
/// (weights on sets) with equal values.
struct FractionalPair {
    FractionalSolution transversal;
    FractionalSolution matching;
};

struct TransversalResult {
    std::size_t size;
    VertexSet witness;
};

struct MatchingResult {
    std::size_t size;
    std::vector<std::size_t> witness;
};

struct VcResult {
    std::size_t dimension;
    VertexSet shattered;
};

struct FracHellyWitness {
    Rational alpha;
    Rational beta;
};

SetSystem dual(const SetSystem& f);

/// One vertex per set, i ~ j iff the sets are disjoint.
Graph disjointness_graph(const SetSystem& f);

/// The system {K_v} over the maximal independent sets `mis` of g, K_v = {i : v in mis[i]}.
SetSystem mis_system(const Graph& g, const std::vector<VertexSet>& mis);
SetSystem mis_system(const Graph& g, const SearchBudget& budget = {});

/// {N(v)} over V(G).
SetSystem neighborhood_system(const Graph& g);

/// Throws Infeasible if some set is empty.
TransversalResult transversal_number(const SetSystem& f, const SearchBudget& budget = {});
MatchingResult matching_number(const SetSystem& f, const SearchBudget& budget = {});

/// Throws Infeasible if some set is empty.
FractionalPair fractional_transversal(const SetSystem& f);

VcResult vc_dimension(const SetSystem& f, const SearchBudget& budget = {});

/// Largest minimal non-intersecting subfamily. 0 for the empty family, 1 for an intersecting one.
std::size_t helly_number(const SetSystem& f, const SearchBudget& budget = {});

/// Every p sets (as indices) contain q with a common element.
bool has_pq_property(const SetSystem& f, std::size_t p, std::size_t q);

FracHellyWitness frac_helly_witness(const SetSystem& f, std::size_t k);

bool is_transversal(const SetSystem& f, const VertexSet& points);
bool is_matching(const SetSystem& f, const std::vector<std::size_t>& indices);

}  // namespace ultrafree
