#include "crcs/generators.hpp"

#include <algorithm>
#include <numeric>

namespace crcs::gen {

namespace {

std::vector<Vertex> shuffled(int n, Rng& rng)
{
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

bool coin(double p, Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

int uniform(int lo, int hi, Rng& rng)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void cograph_edges(std::vector<Vertex> verts, Rng& rng, std::vector<Edge>& out)
{
    if (verts.size() < 2)
        return;
    std::shuffle(verts.begin(), verts.end(), rng);
    const auto cut = static_cast<std::size_t>(uniform(1, static_cast<int>(verts.size()) - 1, rng));
    std::vector<Vertex> a(verts.begin(), verts.begin() + static_cast<long>(cut));
    std::vector<Vertex> b(verts.begin() + static_cast<long>(cut), verts.end());
    if (coin(0.5, rng))
        for (Vertex u : a)
            for (Vertex v : b)
                out.emplace_back(u, v);
    cograph_edges(a, rng, out);
    cograph_edges(b, rng, out);
}

bool color_rec(const Graph& g, const std::vector<Vertex>& order, std::size_t i, int k, Rng& rng,
               std::vector<Color>& f)
{
    if (i == order.size())
        return true;
    const Vertex v = order[i];
    if (f[v] == kStar)
        return color_rec(g, order, i + 1, k, rng, f);
    std::vector<Color> palette(static_cast<std::size_t>(k));
    std::iota(palette.begin(), palette.end(), 1);
    std::shuffle(palette.begin(), palette.end(), rng);
    for (Color c : palette) {
        bool ok = true;
        for (Vertex w : g.neighbors(v))
            ok = ok && f[w] != c;
        if (!ok)
            continue;
        f[v] = c;
        if (color_rec(g, order, i + 1, k, rng, f))
            return true;
    }
    f[v] = -1;
    return false;
}

} // namespace

Graph path_graph(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph random_graph(int n, double p, Rng& rng)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(p, rng))
                g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double p, Rng& rng)
{
    Graph g(n);
    const auto order = shuffled(n, rng);
    for (int i = 1; i < n; ++i)
        g.add_edge(order[i], order[uniform(0, i - 1, rng)]);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(p, rng))
                g.add_edge(u, v);
    return g;
}

Graph random_cograph(int n, Rng& rng)
{
    std::vector<Edge> edges;
    cograph_edges(shuffled(n, rng), rng, edges);
    return Graph(n, edges);
}

Graph random_split_graph(int n, int max_clique, Rng& rng)
{
    const int c = uniform(0, std::clamp(max_clique, 0, n), rng);
    const auto label = shuffled(n, rng);
    Graph g(n);
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            g.add_edge(label[i], label[j]);
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    for (int i = c; i < n; ++i)
        for (int j = 0; j < c; ++j)
            if (coin(p, rng))
                g.add_edge(label[i], label[j]);
    return g;
}

Graph random_bipartite_graph(int n, double p, Rng& rng, std::vector<int>& side)
{
    side.assign(static_cast<std::size_t>(n), 0);
    for (int& s : side)
        s = coin(0.5, rng) ? 1 : 0;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (side[u] != side[v] && coin(p, rng))
                g.add_edge(u, v);
    return g;
}

std::optional<Coloring> random_proper_coloring(const Graph& g, int k, Rng& rng, double star_prob)
{
    std::vector<Color> f(static_cast<std::size_t>(g.n()), -1);
    if (star_prob > 0)
        for (Color& c : f)
            if (coin(star_prob, rng))
                c = kStar;
    if (!color_rec(g, shuffled(g.n(), rng), 0, k, rng, f))
        return std::nullopt;
    return Coloring(k, std::move(f));
}

Coloring random_valid_partner(const Graph& g, const Coloring& fs, Rng& rng, double star_prob)
{
    const auto counts = fs.color_counts();
    const double star_share = g.n() ? static_cast<double>(counts[kStar]) / g.n() : 0.0;
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto ft = random_proper_coloring(g, fs.k, rng, star_prob > 0 ? star_share : 0.0);
        if (ft && ft->color_counts() == counts)
            return *ft;
    }
    Coloring ft = fs;
    for (int step = 0; step < 4 * g.n() + 8; ++step) {
        const auto moves = legal_swaps(g, ft);
        if (moves.empty())
            break;
        const SwapMove m = moves[static_cast<std::size_t>(uniform(0, static_cast<int>(moves.size()) - 1, rng))];
        std::swap(ft.colors[m.u], ft.colors[m.v]);
    }
    return ft;
}

} // namespace crcs::gen
