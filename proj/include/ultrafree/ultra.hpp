#pragma once

#include "ultrafree/budget.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/rational.hpp"
#include "ultrafree/report.hpp"

#include <optional>
#include <vector>

namespace ultrafree {

/// x_i y_i non-adjacent for all i and x_i y_j adjacent for j < i; other pairs unconstrained.
struct HalfGraphEmbedding {
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
};

/// Pairs (u_i, v_i) with u_i v_j an edge iff i = j.
struct BiInducedMatching {
    std::vector<Edge> pairs;
};

struct UltraCertificate {
    std::size_t r = 0;
    /// nullopt means infinite: G has no non-adjacent pair.
    std::optional<Rational> epsilon_star;
    std::optional<Edge> worst_pair;
    std::uint64_t worst_count = 0;

    bool infinite() const { return !epsilon_star; }
    /// eps > 0 and every non-adjacent pair sees at least eps n^{r-2} cliques K_{r-2}.
    bool admits(const Rational& eps) const;
};

/// Exact min over non-adjacent pairs of k_{r-2}(G[N(u) ∩ N(v)]) / n^{r-2}.
/// Throws NotKrFree when G contains K_r, PreconditionViolated when r < 3.
UltraCertificate ultra_parameter(const Graph& g, std::size_t r);

bool is_valid_half_graph(const Graph& g, const HalfGraphEmbedding& h);
bool is_valid_bi_induced_matching(const Graph& g, const BiInducedMatching& m);

/// First embedding of a member of H_k found by extending (x, y) prefixes in index order.
std::optional<HalfGraphEmbedding> find_half_graph(const Graph& g, std::size_t k, const SearchBudget& budget = {});

struct BuildHalfOptions {
    /// Skipping the ultra check lets tests feed non-ultra inputs and observe InternalContradiction.
    bool check_ultra = true;
};

/// Turns a bipartite induced matching {(x_i, z_i)} into a half graph by repeated pigeonholing on
/// shared K_{r-2} copies. Throws PreconditionViolated or InternalContradiction.
HalfGraphEmbedding build_half_from_matching(const Graph& g, const BiInducedMatching& m, std::size_t r,
                                            const Rational& eps, const BuildHalfOptions& options = {});

/// Largest k with (2/eps)^k <= t, the guaranteed size of build_half_from_matching.
std::size_t build_half_guarantee(std::size_t t, const Rational& eps);

struct NuBiResult {
    std::size_t size;
    BiInducedMatching witness;
};

NuBiResult nu_bi(const Graph& g, const SearchBudget& budget = {});

/// VC-dimension of the neighbourhood system is at most t + r - 4 with t = ceil(1/eps) + 1.
Report check_vc_clique_bound(const Graph& g, std::size_t r, const Rational& eps, const SearchBudget& budget = {});

}  // namespace ultrafree
