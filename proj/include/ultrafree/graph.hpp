#pragma once

#include "ultrafree/bitset.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ultrafree {

using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Duplicate edges collapse. Throws PreconditionViolated on loops or out-of-range endpoints.
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const Bitset& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    std::size_t min_degree() const;

    /// Common neighbourhood N(u) ∩ N(v).
    Bitset common_neighbors(Vertex u, Vertex v) const { return adj_[u] & adj_[v]; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Bitset all_vertices() const { return Bitset::full(order()); }

    Graph complement() const;
    Graph induced(const VertexSet& vertices) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Bitset> adj_;
};

}  // namespace ultrafree
