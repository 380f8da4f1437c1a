#pragma once

#include "ultrafree/budget.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/rational.hpp"
#include "ultrafree/report.hpp"
#include "ultrafree/setsystem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ultrafree {

enum class SpaceKind { from_graph, subcubes, explicit_space };

std::string to_string(SpaceKind k);

/// Points 0..size-1 with generator sets; the convex sets are all intersections of generators
/// together with the empty set and the whole ground.
class ConvexitySpace {
public:
    /// Ground = MIS(G) in lexicographic order, generators K_v.
    static ConvexitySpace from_graph(const Graph& g, const SearchBudget& budget = {});

    /// Ground = {0,1}^n, point p has coordinate i equal to bit i of p; generators are the 2n
    /// coordinate half-cubes {x : x_i = b}, so convex sets are the subcubes.
    static ConvexitySpace subcubes(std::size_t n);

    static ConvexitySpace explicit_space(const SetSystem& generators);

    SpaceKind kind() const { return kind_; }
    std::size_t size() const { return generators_.ground_size(); }
    const SetSystem& generators() const { return generators_; }

    /// From-graph spaces only.
    const Graph& graph() const;
    const std::vector<VertexSet>& mis() const { return mis_; }
    std::size_t cube_dimension() const { return cube_dim_; }

    std::string point_label(std::size_t p) const;

    /// Smallest convex set containing y; conv of the empty set is empty.
    Bitset hull(const Bitset& y) const;
    Bitset hull(const std::vector<std::size_t>& y) const;

    bool is_convex(const Bitset& c) const { return hull(c) == c; }

    /// Every convex set, deduplicated, in discovery order starting with the ground and the empty set.
    std::vector<Bitset> convex_sets(const SearchBudget& budget = {}) const;

private:
    ConvexitySpace(SpaceKind kind, SetSystem generators) : kind_(kind), generators_(std::move(generators)) {}

    SpaceKind kind_;
    SetSystem generators_;
    std::optional<Graph> graph_;
    std::vector<VertexSet> mis_;
    std::size_t cube_dim_ = 0;
};

inline ConvexitySpace mis_space(const Graph& g, const SearchBudget& budget = {})
{
    return ConvexitySpace::from_graph(g, budget);
}

struct RadonPartition {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
};

/// First bipartition (by binary counter over y's order) whose hulls meet. For from-graph spaces
/// every candidate is also checked against the edge-count reformulation; a disagreement throws
/// ClaimViolation.
std::optional<RadonPartition> radon_partition(const ConvexitySpace& s, const std::vector<std::size_t>& y);

/// Least r in [2, cap] such that every r-subset of points has a Radon partition; r = size()+1
/// holds vacuously. nullopt when no r <= cap qualifies.
std::optional<std::size_t> radon_number(const ConvexitySpace& s, std::size_t cap,
                                        const SearchBudget& budget = {});

/// Size of the largest point set with no Radon partition.
std::size_t radon_independence(const ConvexitySpace& s, const SearchBudget& budget = {});

/// Largest Y with the intersection of conv(Y - y) over y in Y empty, which equals the Helly
/// number of the family of convex sets.
std::size_t space_helly_number(const ConvexitySpace& s, const SearchBudget& budget = {});

/// Finitely supported probability measure on the points of a space.
struct Measure {
    std::vector<Rational> weights;

    static Measure uniform(std::size_t points);
    /// Throws PreconditionViolated unless weights are non-negative and sum to 1.
    void validate(std::size_t points) const;
    Rational of(const Bitset& c) const;
};

/// Greedy point set meeting every convex set of measure at least eps.
std::vector<std::size_t> weak_eps_net(const ConvexitySpace& s, const Measure& mu, const Rational& eps,
                                      const SearchBudget& budget = {});

/// Graph/set-system dictionary checks on G and its MIS system.
Report verify_table1(const Graph& g, std::size_t r, const SearchBudget& budget = {});

}  // namespace ultrafree
