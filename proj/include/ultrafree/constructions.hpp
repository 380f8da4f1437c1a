#pragma once

#include "ultrafree/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ultrafree {

/// Complete multipartite graph, part sizes differing by at most one (larger parts first),
/// vertices grouped part by part.
Graph turan(std::size_t n, std::size_t parts);

/// Vertices are the k-subsets of {0..m-1} in lexicographic order; adjacency is disjointness.
Graph kneser(std::size_t m, std::size_t k);

/// K_{t,t} minus a perfect matching: x_i = i, y_i = t + i, x_i ~ y_j iff i != j.
Graph mtt(std::size_t t);

/// M_{t,t} joined to a maximal triangle-free Gamma on z_1..z_t via x_i z_i and y_i z_i, then each
/// x/y vertex blown up into a copies and each z vertex into b copies.
/// Layout: x-copies, then y-copies, then z-copies; copies of one vertex are consecutive.
Graph gamma_blowup(const Graph& gamma, std::size_t a, std::size_t b);

/// K_{n/8,n/8}[1,2], i.e. gamma_blowup(K_{n/8,n/8}, 1, 2). n must be a multiple of 8 and at least 16.
Graph ultra_vc_example(std::size_t n);

struct BlowupResult {
    Graph graph;
    std::vector<Vertex> origin;  // blown-up vertex -> vertex of F
};

/// Replaces vertex i of F by sizes[i] independent copies; copies of one vertex are consecutive.
BlowupResult blowup(const Graph& f, const std::vector<std::size_t>& sizes);

struct HypercubeLowerBound {
    std::size_t d = 0;
    Graph h;                     // D ∪ Q, |H| = 2d + 2^d
    Graph g;                     // D-vertices blown up
    std::vector<Vertex> origin;  // G-vertex -> H-vertex
    std::size_t copies = 0;      // size of each blown-up a-class

    /// H-index of a_i^{(j)}.
    static Vertex d_vertex(std::size_t i, std::size_t j) { return 2 * i + j; }
    /// H-index of the cube point whose bit i is coordinate i.
    Vertex q_vertex(std::uint64_t code) const { return 2 * d + code; }
    /// G-index of the same cube point (a-classes come first in G).
    Vertex g_q_vertex(std::uint64_t code) const { return 2 * d * copies + code; }
};

/// The triangle-free lower-bound construction: a_i^{(0)} a_i^{(1)} edges, antipodal cube edges, and
/// u ~ a_i^{(u_i)}; G blows each a-vertex into `d_copies` copies (2^d when zero).
HypercubeLowerBound hypercube_lb(std::size_t d, std::size_t d_copies = 0);

/// Minimal member of the half-graph family: x_i = i, y_i = k + i, edges x_i y_j for j < i only.
Graph half_min(std::size_t k);

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();

/// Seeded greedy maximal triangle-free graph (test fodder).
Graph random_maximal_triangle_free(std::size_t n, std::uint64_t seed);

/// Named family plus integer and graph parameters, as accepted by `gen`.
struct ConstructionSpec {
    std::string family;
    std::map<std::string, std::int64_t> ints;
    std::map<std::string, Graph> graphs;
    std::vector<std::size_t> sizes;
};

/// Builds the graph a ConstructionSpec describes. Throws PreconditionViolated on bad parameters.
Graph construct(const ConstructionSpec& spec);

/// All connected graphs with 1..max_n vertices up to isomorphism, by vertex augmentation with
/// canonical-code deduplication; ordered by vertex count then code.
std::vector<Graph> connected_graph_catalog(std::size_t max_n);

/// `count` seeded random graphs with between min_n and max_n vertices.
std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed);

}  // namespace ultrafree
