#include "ultrafree/graph.hpp"

#include "ultrafree/errors.hpp"

#include <algorithm>
#include <string>

namespace ultrafree {

Graph::Graph(std::size_t n) : adj_(n, Bitset(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

std::size_t Graph::min_degree() const
{
    std::size_t best = order() == 0 ? 0 : order();
    for (Vertex v = 0; v < order(); ++v)
        best = std::min(best, degree(v));
    return best;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u >= order() || v >= order())
        throw PreconditionViolated("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v)
        throw PreconditionViolated("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    adj_[u].reset(v);
    adj_[v].reset(u);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = adj_[u].next(u + 1); v != Bitset::npos; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const
{
    Graph g(order());
    for (Vertex v = 0; v < order(); ++v) {
        g.adj_[v] = adj_[v].complement();
        g.adj_[v].reset(v);
    }
    return g;
}

Graph Graph::induced(const VertexSet& vertices) const
{
    Graph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                g.add_edge(i, j);
    return g;
}

}  // namespace ultrafree
