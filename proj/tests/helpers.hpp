#pragma once

#include <initializer_list>
#include <vector>

#include "crcs/core.hpp"

namespace testing {

using namespace crcs;

inline Graph graph_of(int n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

inline Coloring col(int k, std::vector<Color> c)
{
    return Coloring(k, std::move(c));
}

// The six-vertex example with a three-swap solution; vertices 0-based.
inline Instance fig1()
{
    return {graph_of(6, {{0, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {2, 0}, {0, 3}, {2, 5}}), 3,
            col(3, {1, 2, 3, 3, 1, 2}), col(3, {1, 3, 2, 2, 3, 1})};
}

inline Graph star(int leaves)
{
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

inline Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

// Graph number `mask` among all labeled graphs on n vertices.
inline Graph graph_from_mask(int n, unsigned long mask)
{
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1)
                g.add_edge(u, v);
    return g;
}

// Perfect elimination ordering search by repeated simplicial-vertex removal.
inline bool is_chordal(const Graph& g)
{
    std::vector<bool> gone(static_cast<std::size_t>(g.n()), false);
    for (int round = 0; round < g.n(); ++round) {
        bool found = false;
        for (Vertex v = 0; v < g.n() && !found; ++v) {
            if (gone[v])
                continue;
            std::vector<Vertex> nb;
            for (Vertex w : g.neighbors(v))
                if (!gone[w])
                    nb.push_back(w);
            bool simplicial = true;
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j)
                    simplicial = g.has_edge(nb[i], nb[j]);
            if (simplicial) {
                gone[v] = true;
                found = true;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

// Exhaustive split test over all vertex bipartitions.
inline bool is_split_brute(const Graph& g)
{
    const int n = g.n();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                const bool cu = mask >> u & 1, cv = mask >> v & 1;
                if (cu && cv && !g.has_edge(u, v))
                    ok = false;
                if (!cu && !cv && g.has_edge(u, v))
                    ok = false;
            }
        if (ok)
            return true;
    }
    return false;
}

} // namespace testing

#include "crcs/problems.hpp"

namespace testing {

// Two triangles joined by three spokes: AND vertices 0,1,2 on a weight-1
// triangle, OR vertices 3,4,5 on a weight-2 triangle, spokes of weight 2.
// Edge ids: 0 ab, 1 bc, 2 ca, 3 ad, 4 be, 5 cf, 6 de, 7 ef, 8 fd.
inline NclMachine prism_machine()
{
    NclMachine m;
    m.vertices = {NclType::And, NclType::And, NclType::And, NclType::Or, NclType::Or, NclType::Or};
    m.edges = {{0, 0, 1, 1}, {1, 1, 2, 1}, {2, 2, 0, 1}, {3, 0, 3, 2}, {4, 1, 4, 2},
               {5, 2, 5, 2}, {6, 3, 4, 2}, {7, 4, 5, 2}, {8, 5, 3, 2}};
    return m;
}

// Spokes into the AND side, both triangles oriented cyclically.
inline NclOrientation prism_orientation()
{
    return {{1, 2, 0, 0, 1, 2, 4, 5, 3}};
}

} // namespace testing
