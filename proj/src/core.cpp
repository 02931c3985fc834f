#include "crcs/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "crcs/errors.hpp"

namespace crcs {

bool Coloring::has_star() const
{
    return std::find(colors.begin(), colors.end(), kStar) != colors.end();
}

Coloring Coloring::restrict_to(std::span<const Vertex> vertices) const
{
    Coloring out;
    out.k = k;
    out.colors.reserve(vertices.size());
    for (Vertex v : vertices)
        out.colors.push_back(colors[v]);
    return out;
}

std::vector<int> Coloring::color_counts() const
{
    std::vector<int> counts(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
    for (Color c : colors)
        if (c >= 0 && c <= k)
            ++counts[c];
    return counts;
}

std::string to_string(const Coloring& f)
{
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < f.size(); ++i) {
        if (i)
            os << ',';
        if (f[i] == kStar)
            os << '*';
        else
            os << f[i];
    }
    os << ')';
    return os.str();
}

void check_well_formed(const Graph& g, const Coloring& f, bool allow_star)
{
    if (f.size() != g.n())
        throw IllFormedInput("coloring has " + std::to_string(f.size()) + " entries for a graph on " +
                             std::to_string(g.n()) + " vertices");
    if (f.k < 1 && g.n() > 0)
        throw IllFormedInput("color count k must be positive");
    for (int v = 0; v < f.size(); ++v) {
        Color c = f[v];
        if (c == kStar && allow_star)
            continue;
        if (c < 1 || c > f.k)
            throw IllFormedInput("vertex " + std::to_string(v) + " has color " +
                                 (c == kStar ? std::string("*") : std::to_string(c)) + " outside [1, " +
                                 std::to_string(f.k) + "]");
    }
}

bool is_proper(const Graph& g, const Coloring& f)
{
    check_well_formed(g, f, false);
    for (auto [u, v] : g.edges())
        if (f[u] == f[v])
            return false;
    return true;
}

bool is_proper_extended(const Graph& g, const Coloring& f)
{
    check_well_formed(g, f, true);
    for (auto [u, v] : g.edges())
        if (f[u] == f[v] && f[u] != kStar)
            return false;
    return true;
}

bool is_valid(const Instance& instance)
{
    if (instance.fs.size() != instance.ft.size())
        return false;
    auto a = instance.fs.color_counts();
    auto b = instance.ft.color_counts();
    a.resize(std::max(a.size(), b.size()), 0);
    b.resize(a.size(), 0);
    return a == b;
}

bool swap_is_legal(const Graph& g, std::span<const Color> f, Vertex u, Vertex v)
{
    const Color cu = f[u];
    const Color cv = f[v];
    if (cu == cv)
        return false; // both kStar: the coloring would not change
    if (cv != kStar)
        for (Vertex w : g.neighbors(u))
            if (w != v && f[w] == cv)
                return false;
    if (cu != kStar)
        for (Vertex w : g.neighbors(v))
            if (w != u && f[w] == cu)
                return false;
    return true;
}

std::vector<SwapMove> legal_swaps(const Graph& g, const Coloring& f)
{
    if (!is_proper_extended(g, f))
        throw PreconditionError("legal_swaps requires an (extended-)proper coloring, got " + to_string(f));
    std::vector<SwapMove> out;
    for (auto [u, v] : g.edges())
        if (swap_is_legal(g, f.colors, u, v))
            out.emplace_back(u, v);
    return out;
}

Coloring apply_swap(const Graph& g, const Coloring& f, SwapMove move)
{
    if (move.u < 0 || move.v >= g.n() || move.u == move.v || !g.has_edge(move.u, move.v))
        throw PreconditionError("swap (" + std::to_string(move.u) + ", " + std::to_string(move.v) +
                                ") is not an edge");
    if (f.size() != g.n() || !is_proper_extended(g, f) || !swap_is_legal(g, f.colors, move.u, move.v))
        throw PreconditionError("swap (" + std::to_string(move.u) + ", " + std::to_string(move.v) +
                                ") is not legal for " + to_string(f));
    Coloring out = f;
    std::swap(out.colors[move.u], out.colors[move.v]);
    return out;
}

Coloring replay(const Graph& g, const ReconfSequence& seq)
{
    Coloring f = seq.start;
    for (SwapMove m : seq.moves)
        f = apply_swap(g, f, m);
    return f;
}

bool solve_k_le_2(const Instance& instance)
{
    const Graph& g = instance.graph;
    if (instance.k > 2)
        throw WrongSolver("the k <= 2 solver was given k = " + std::to_string(instance.k));
    if (instance.extended())
        throw WrongSolver("the k <= 2 solver does not accept extended colorings");
    if (!is_proper(g, instance.fs) || !is_proper(g, instance.ft))
        throw PreconditionError("instance colorings must be proper");
    if (!is_valid(instance))
        return false;
    if (instance.k == 1)
        return true;
    for (const auto& comp : g.components()) {
        const Coloring s = instance.fs.restrict_to(comp);
        const Coloring t = instance.ft.restrict_to(comp);
        if (comp.size() <= 2) {
            if (s.color_counts() != t.color_counts())
                return false;
        } else if (s != t) {
            // A connected bipartite graph on >= 3 vertices admits no swap.
            return false;
        }
    }
    return true;
}

ReconfSequence route_bijective(const Graph& g, const Coloring& from, const Coloring& to)
{
    const int n = g.n();
    if (from.size() != n || to.size() != n)
        throw PreconditionError("route_bijective: coloring length does not match the graph");
    if (!g.is_connected())
        throw PreconditionError("route_bijective requires a connected graph");
    std::vector<Color> a = from.colors, b = to.colors;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || a != b)
        throw PreconditionError("route_bijective requires two bijective colorings onto the same color set");

    ReconfSequence seq{from, {}};
    if (n <= 1)
        return seq;

    // BFS spanning tree rooted at 0; reverse BFS order visits each vertex
    // while it is a leaf of the not-yet-fixed part of the tree.
    std::vector<int> parent(static_cast<std::size_t>(n), -1), depth(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        order.push_back(u);
        for (Vertex w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                depth[w] = depth[u] + 1;
                q.push(w);
            }
    }

    std::vector<Color> cur = from.colors;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex leaf = *it;
        const Color want = to[leaf];
        Vertex src = static_cast<Vertex>(std::find(cur.begin(), cur.end(), want) - cur.begin());
        if (src == leaf)
            continue;
        // Tree path src -> lca -> leaf; every vertex on it is still unfixed
        // because fixed vertices are leaves hanging off the remaining tree.
        std::vector<Vertex> up, down;
        Vertex x = src, y = leaf;
        while (depth[x] > depth[y]) {
            up.push_back(x);
            x = parent[x];
        }
        while (depth[y] > depth[x]) {
            down.push_back(y);
            y = parent[y];
        }
        while (x != y) {
            up.push_back(x);
            down.push_back(y);
            x = parent[x];
            y = parent[y];
        }
        up.push_back(x);
        std::vector<Vertex> path = up;
        path.insert(path.end(), down.rbegin(), down.rend());
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            std::swap(cur[path[i]], cur[path[i + 1]]);
            seq.moves.emplace_back(path[i], path[i + 1]);
        }
    }
    return seq;
}

} // namespace crcs
