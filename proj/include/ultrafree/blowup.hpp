#pragma once

#include "ultrafree/budget.hpp"
#include "ultrafree/graph.hpp"
#include "ultrafree/graph_algorithms.hpp"
#include "ultrafree/rational.hpp"
#include "ultrafree/report.hpp"
#include "ultrafree/setsystem.hpp"

#include <map>
#include <string>
#include <vector>

namespace ultrafree {

/// G = F[.]: parts[i] is the class of quotient vertex i, origin[v] the class of v.
struct BlowupDecomposition {
    std::vector<VertexSet> parts;
    Graph quotient;
    std::vector<Vertex> origin;
};

/// Parts partition V(G), match origin, and u ~ v in G iff origin[u] ~ origin[v] in F.
/// On failure `why` (if given) receives a description.
bool verify_decomposition(const Graph& g, const BlowupDecomposition& d, std::string* why = nullptr);

/// Every edge of g maps to an edge of f.
bool verify_hom(const Graph& g, const Graph& f, const std::vector<Vertex>& phi);

/// Greedy subfamily, scanning indices upward, with pairwise symmetric difference > s.
std::vector<std::size_t> separated_subfamily(const SetSystem& f, const Rational& s);

/// e (d+1) (2e m / separation)^d with e replaced by its rational upper bound.
Rational packing_bound(std::size_t d, std::size_t m, const Rational& separation);

struct HausslerResult {
    BlowupDecomposition decomposition;
    std::vector<Vertex> centers;
    Rational s;
    std::size_t vc_dimension = 0;
    Report report;
};

/// Decomposition of an eps-ultra maximal K_r-free graph around a separated family of
/// neighbourhoods. Every intermediate claim is checked; a failure throws ClaimViolation.
HausslerResult haussler_partition(const Graph& g, std::size_t r, const Rational& eps,
                                  const SearchBudget& budget = {});

/// Classes of vertices with equal open neighbourhoods, in order of first occurrence.
BlowupDecomposition twin_quotient(const Graph& g);

struct ObstructionCertificate {
    VertexSet core;
    std::map<Edge, P4Link> links;
};

/// Largest vertex set whose pairs are all joined by induced P4s.
ObstructionCertificate p4_obstruction(const Graph& g, const SearchBudget& budget = {});
bool is_valid_obstruction(const Graph& g, const ObstructionCertificate& c);

struct ChromaticPartition {
    std::vector<std::size_t> coloring;
    std::size_t colors = 0;
    std::size_t vc_dimension = 0;
    Report report;
};

/// Colours a triangle-free graph with minimum degree >= c n by clustering neighbourhoods at
/// radius c n / 3. Throws PreconditionViolated or ClaimViolation.
ChromaticPartition vc_chromatic_partition(const Graph& g, const Rational& c, const SearchBudget& budget = {});

/// For maximal K_r-free G with min degree >= ((2r-5)/(2r-3) + eps) n, checks eps* >= eps^{r-2}.
Report min_degree_ultra_check(const Graph& g, std::size_t r, const Rational& eps);

}  // namespace ultrafree
