#pragma once

#include <span>
#include <utility>
#include <vector>

namespace crcs {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    /// Adds edge uv. Throws IllFormedInput on self-loops, out-of-range ids or
    /// a duplicate edge.
    void add_edge(Vertex u, Vertex v);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;
    Graph complement() const;

    /// Component id per vertex; ids are assigned in order of smallest member.
    std::vector<int> component_ids(int* count = nullptr) const;
    std::vector<std::vector<Vertex>> components() const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// True iff the graph is a single path (n <= 1, or connected with exactly two
/// degree-1 vertices and all others of degree 2).
bool is_path_graph(const Graph& g);

/// Two-coloring of the vertices if the graph is bipartite.
bool bipartition(const Graph& g, std::vector<int>* side);

} // namespace crcs
