#pragma once

#include "ultrafree/budget.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ultrafree {

/// Number of b-vertex cliques (as vertex subsets) inside G[within]; `within` defaults to V(G).
std::uint64_t count_cliques(const Graph& g, std::size_t b, const std::optional<Bitset>& within = std::nullopt);

/// Calls f on every b-clique inside `within`, each sorted, in lexicographic order.
void for_each_clique(const Graph& g, std::size_t b, const Bitset& within,
                     const std::function<void(const VertexSet&)>& f);

/// Maximum clique by branch and bound with a greedy colouring bound. Deterministic witness.
VertexSet max_clique(const Graph& g, const SearchBudget& budget = {});
std::size_t clique_number(const Graph& g);

/// Optimal proper colouring (colour per vertex, colours 0..chi-1) by DSATUR branch and bound.
std::vector<std::size_t> optimal_coloring(const Graph& g, const SearchBudget& budget = {});
std::size_t chromatic_number(const Graph& g, const SearchBudget& budget = {});

/// All maximal independent sets, each sorted, in lexicographic order.
std::vector<VertexSet> enumerate_mis(const Graph& g, const SearchBudget& budget = {});

/// Calls f(I, N(I)) for every independent set I of size a, in lexicographic order.
void for_each_independent_set(const Graph& g, std::size_t a,
                              const std::function<void(const VertexSet&, const Bitset&)>& f);

/// min |N(I)| over independent a-sets I; nullopt when G has no independent a-set.
std::optional<std::size_t> codegree_min(const Graph& g, std::size_t a);

/// min over independent a-sets I of k_b(G[N(I)]) / C(|N(I)|, b); sets with |N(I)| < b score 0.
std::optional<Rational> clique_codensity(const Graph& g, std::size_t a, std::size_t b);

/// prod_{i=1}^{s-1} (t-1-i)/(t-1), the K_s-density of the Turán graph T_{n,t-1} in the limit.
Rational pi_density(std::size_t s, std::size_t t);

struct P4Link {
    Vertex y;
    Vertex z;
};

/// Lowest-index (y, z) such that u-y-z-v is an induced path on four vertices.
std::optional<P4Link> has_induced_p4(const Graph& g, Vertex u, Vertex v);
bool is_induced_p4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_kr_free(const Graph& g, std::size_t r);

/// K_r-free and adding any non-edge creates a K_r.
bool is_maximal_kr_free(const Graph& g, std::size_t r);
bool is_connected(const Graph& g);

/// Vertex map a -> b preserving adjacency and non-adjacency, if one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Isomorphism-invariant code for graphs with at most 11 vertices.
std::uint64_t canonical_code(const Graph& g);

}  // namespace ultrafree
