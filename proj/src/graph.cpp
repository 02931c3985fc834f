#include "crcs/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "crcs/errors.hpp"

namespace crcs {

Graph::Graph(int n)
{
    if (n < 0)
        throw IllFormedInput("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw IllFormedInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n()) + ")");
    if (u == v)
        throw IllFormedInput("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw IllFormedInput("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> index(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : adj_[vertices[i]])
            if (index[w] > static_cast<int>(i))
                h.add_edge(static_cast<int>(i), index[w]);
    return h;
}

Graph Graph::complement() const
{
    Graph h(n());
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v = u + 1; v < n(); ++v)
            if (!has_edge(u, v))
                h.add_edge(u, v);
    return h;
}

std::vector<int> Graph::component_ids(int* count) const
{
    std::vector<int> comp(adj_.size(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n(); ++s) {
        if (comp[s] != -1)
            continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj_[u])
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    if (count)
        *count = next;
    return comp;
}

std::vector<std::vector<Vertex>> Graph::components() const
{
    int count = 0;
    auto comp = component_ids(&count);
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < n(); ++v)
        out[comp[v]].push_back(v);
    return out;
}

bool Graph::is_connected() const
{
    int count = 0;
    component_ids(&count);
    return count <= 1;
}

bool is_path_graph(const Graph& g)
{
    if (g.n() <= 1)
        return true;
    if (!g.is_connected() || g.edge_count() != static_cast<std::size_t>(g.n() - 1))
        return false;
    int ends = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 1)
            ++ends;
        else if (g.degree(v) != 2)
            return false;
    }
    return ends == 2;
}

bool bipartition(const Graph& g, std::vector<int>* side)
{
    std::vector<int> s(static_cast<std::size_t>(g.n()), -1);
    std::queue<Vertex> q;
    for (Vertex r = 0; r < g.n(); ++r) {
        if (s[r] != -1)
            continue;
        s[r] = 0;
        q.push(r);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (s[w] == -1) {
                    s[w] = 1 - s[u];
                    q.push(w);
                } else if (s[w] == s[u]) {
                    return false;
                }
            }
        }
    }
    if (side)
        *side = std::move(s);
    return true;
}

} // namespace crcs
