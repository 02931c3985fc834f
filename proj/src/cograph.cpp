#include "crcs/cograph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "crcs/errors.hpp"

namespace crcs::cograph {

std::vector<Vertex> Cotree::leaves(int node) const
{
    std::vector<Vertex> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        const Node& x = nodes[stack.back()];
        stack.pop_back();
        if (x.kind == NodeKind::Leaf) {
            out.push_back(x.vertex);
        } else {
            stack.push_back(x.left);
            stack.push_back(x.right);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph Cotree::evaluate(int vertex_count) const
{
    Graph g(vertex_count);
    for (const Node& x : nodes) {
        if (x.kind != NodeKind::Join)
            continue;
        for (Vertex a : leaves(x.left))
            for (Vertex b : leaves(x.right))
                g.add_edge(a, b);
    }
    return g;
}

namespace {

int add_node(Cotree& t, Cotree::Node node)
{
    t.nodes.push_back(node);
    return static_cast<int>(t.nodes.size()) - 1;
}

int combine_left_deep(Cotree& t, NodeKind kind, const std::vector<int>& children)
{
    int acc = children.front();
    for (std::size_t i = 1; i < children.size(); ++i)
        acc = add_node(t, {kind, -1, acc, children[i]});
    return acc;
}

int build(Cotree& t, const Graph& g, const std::vector<Vertex>& verts)
{
    if (verts.size() == 1)
        return add_node(t, {NodeKind::Leaf, verts[0], -1, -1});
    const Graph h = g.induced(verts);
    auto parts = h.components();
    NodeKind kind = NodeKind::Union;
    if (parts.size() == 1) {
        parts = h.complement().components();
        kind = NodeKind::Join;
        if (parts.size() == 1)
            throw NotACograph();
    }
    // Components come out ordered by smallest member, which is what fixes
    // the child order.
    std::vector<int> children;
    for (const auto& part : parts) {
        std::vector<Vertex> sub;
        for (Vertex i : part)
            sub.push_back(verts[i]);
        children.push_back(build(t, g, sub));
    }
    return combine_left_deep(t, kind, children);
}

} // namespace

Cotree build_cotree(const Graph& g)
{
    Cotree t;
    if (g.n() == 0)
        return t;
    std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v)
        all[v] = v;
    t.root = build(t, g, all);
    return t;
}

Cotree parse_cotree(const std::string& text)
{
    Cotree t;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) -> int {
        throw ParseError(1, static_cast<int>(pos) + 1, "cotree: " + what);
    };
    std::function<int()> node = [&]() -> int {
        skip();
        if (pos >= text.size())
            return fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            const int v = std::stoi(text.substr(pos, end - pos));
            pos = end;
            return add_node(t, {NodeKind::Leaf, v, -1, -1});
        }
        if (text[pos] != '(')
            return fail("expected '(' or a vertex id");
        ++pos;
        skip();
        if (pos >= text.size() || (text[pos] != 'U' && text[pos] != 'J'))
            return fail("expected node type U or J");
        const NodeKind kind = text[pos] == 'U' ? NodeKind::Union : NodeKind::Join;
        ++pos;
        std::vector<int> children;
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            children.push_back(node());
        }
        if (children.size() < 2)
            return fail("internal nodes need at least two children");
        return combine_left_deep(t, kind, children);
    };
    t.root = node();
    skip();
    if (pos != text.size())
        fail("trailing characters");
    return t;
}

std::string format_cotree(const Cotree& t)
{
    if (t.root < 0)
        return "";
    std::function<std::string(int)> fmt = [&](int i) -> std::string {
        const auto& x = t.nodes[i];
        if (x.kind == NodeKind::Leaf)
            return std::to_string(x.vertex);
        return std::string("(") + (x.kind == NodeKind::Union ? "U " : "J ") + fmt(x.left) + " " + fmt(x.right) + ")";
    };
    return fmt(t.root);
}

void check_cotree(const Cotree& t, const Graph& g)
{
    if (g.n() == 0) {
        if (t.root >= 0)
            throw PreconditionError("cotree has leaves but the graph is empty");
        return;
    }
    if (t.root < 0)
        throw PreconditionError("empty cotree for a non-empty graph");
    auto leaves = t.leaves(t.root);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (leaves[i] != static_cast<Vertex>(i) || i >= static_cast<std::size_t>(g.n()))
            throw PreconditionError("cotree leaves do not biject with the graph's vertices");
    if (leaves.size() != static_cast<std::size_t>(g.n()))
        throw PreconditionError("cotree leaves do not biject with the graph's vertices");
    if (!(t.evaluate(g.n()) == g))
        throw PreconditionError("cotree does not realize the graph");
}

SwappableColors swappable_colors(const Coloring& f)
{
    SwappableColors out;
    const auto counts = f.color_counts();
    if (!counts.empty() && counts[kStar] > 0)
        out.insert(kStar);
    for (Color c = 1; c < static_cast<Color>(counts.size()); ++c)
        if (counts[c] == 1)
            out.insert(c);
    return out;
}

Coloring star_project(const Coloring& f, std::span<const Vertex> part, const SwappableColors& swappable)
{
    Coloring out = f.restrict_to(part);
    for (Color& c : out.colors)
        if (swappable.contains(c))
            c = kStar;
    return out;
}

namespace {

struct Solver {
    const Cotree& tree;
    std::vector<std::vector<Vertex>> leaves; // per node, ascending

    // s and t are indexed by position in leaves[node].
    bool solve(int node, const Coloring& s, const Coloring& t) const
    {
        if (s.color_counts() != t.color_counts())
            return false;
        const auto& x = tree.nodes[node];
        if (x.kind == NodeKind::Leaf)
            return s[0] == t[0];

        const auto& here = leaves[node];
        auto positions = [&](int child) {
            std::vector<Vertex> pos;
            for (Vertex v : leaves[child])
                pos.push_back(static_cast<Vertex>(std::lower_bound(here.begin(), here.end(), v) - here.begin()));
            return pos;
        };
        const auto p1 = positions(x.left);
        const auto p2 = positions(x.right);

        if (x.kind == NodeKind::Union)
            return solve(x.left, s.restrict_to(p1), t.restrict_to(p1)) &&
                   solve(x.right, s.restrict_to(p2), t.restrict_to(p2));

        const Coloring s1 = s.restrict_to(p1), s2 = s.restrict_to(p2);
        const Coloring t1 = t.restrict_to(p1), t2 = t.restrict_to(p2);
        const bool s1_empty = swappable_colors(s1).empty(), s2_empty = swappable_colors(s2).empty();
        if (s1_empty != swappable_colors(t1).empty() || s2_empty != swappable_colors(t2).empty())
            return false;
        if (s1_empty || s2_empty)
            return solve(x.left, s1, t1) && solve(x.right, s2, t2);
        const auto ss = swappable_colors(s), st = swappable_colors(t);
        return solve(x.left, star_project(s, p1, ss), star_project(t, p1, st)) &&
               solve(x.right, star_project(s, p2, ss), star_project(t, p2, st));
    }
};

} // namespace

bool solve_ecrcs_cograph(const Cotree& t, int k, const Coloring& fs, const Coloring& ft)
{
    const int n = fs.size();
    if (ft.size() != n)
        throw IllFormedInput("colorings differ in length");
    if (n == 0)
        return true;
    if (t.root < 0 || static_cast<int>(t.leaves(t.root).size()) != n)
        throw IllFormedInput("cotree and colorings disagree on the vertex count");
    Coloring s = fs, tt = ft;
    s.k = tt.k = k;
    Solver solver{t, {}};
    solver.leaves.resize(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        solver.leaves[i] = t.leaves(static_cast<int>(i));
    // Root leaves are 0..n-1, so vertex ids double as positions.
    return solver.solve(t.root, s, tt);
}

bool solve_crcs_cograph(const Instance& instance)
{
    return solve_crcs_cograph(instance, build_cotree(instance.graph));
}

bool solve_crcs_cograph(const Instance& instance, const Cotree& t)
{
    const Graph& g = instance.graph;
    const bool ok = instance.extended() ? is_proper_extended(g, instance.fs) && is_proper_extended(g, instance.ft)
                                        : is_proper(g, instance.fs) && is_proper(g, instance.ft);
    if (!ok)
        throw PreconditionError("instance colorings must be proper");
    check_cotree(t, g);
    if (!is_valid(instance))
        return false;
    return solve_ecrcs_cograph(t, instance.k, instance.fs, instance.ft);
}

} // namespace crcs::cograph
