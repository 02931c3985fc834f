#include "crcs/reductions.hpp"

#include <algorithm>

#include "crcs/errors.hpp"
#include "crcs/split_kernel.hpp"

namespace crcs::reduce {

Vertex InstanceBuilder::add_vertex(Color s, Color t)
{
    fs.push_back(s);
    ft.push_back(t);
    return size() - 1;
}

Instance InstanceBuilder::build() const
{
    return {Graph(size(), edges), k, Coloring(k, fs), Coloring(k, ft)};
}

Vertex GadgetLayout::find(const std::string& role) const
{
    for (const auto& [name, v] : roles)
        if (name == role)
            return v;
    return -1;
}

namespace {

void require_proper(const Instance& out)
{
    if (!is_proper(out.graph, out.fs) || !is_proper(out.graph, out.ft))
        throw PreconditionError("construction produced an improper coloring");
}

// 1 on `ones`, then 2, 3, ... on the remaining vertices by ascending id.
std::vector<Color> one_plus_distinct(int n, const std::vector<bool>& ones)
{
    std::vector<Color> f(static_cast<std::size_t>(n));
    Color next = 2;
    for (int v = 0; v < n; ++v)
        f[v] = ones[v] ? 1 : next++;
    return f;
}

std::vector<bool> mark(int n, const std::vector<Vertex>& set)
{
    std::vector<bool> out(static_cast<std::size_t>(n), false);
    for (Vertex v : set)
        out[v] = true;
    return out;
}

} // namespace

Instance ts_split_to_crcs(const TokenSlidingInstance& ts, GadgetLayout* layout)
{
    check_token_sliding(ts);
    if (ts.is.size() < 2)
        throw PreconditionError("the split construction needs at least two tokens");
    try {
        split::split_partition(ts.graph);
    } catch (const NotSplit&) {
        throw PreconditionError("token sliding graph is not a split graph");
    }
    const int n = ts.graph.n();
    auto edges = ts.graph.edges();
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, n);
    const int k = (n + 1) - static_cast<int>(ts.is.size()) + 1;
    Instance out{Graph(n + 1, edges), k, Coloring(k, one_plus_distinct(n + 1, mark(n + 1, ts.is))),
                 Coloring(k, one_plus_distinct(n + 1, mark(n + 1, ts.it)))};
    if (layout)
        layout->roles.emplace_back("universal", n);
    require_proper(out);
    return out;
}

Instance ts_bipartite_to_crcs(const TokenSlidingInstance& ts, GadgetLayout* layout)
{
    check_token_sliding(ts);
    const int n = ts.graph.n();
    std::vector<int> side = ts.side;
    if (side.empty()) {
        if (!bipartition(ts.graph, &side))
            throw PreconditionError("token sliding graph is not bipartite");
    } else {
        if (static_cast<int>(side.size()) != n)
            throw PreconditionError("bipartition has the wrong length");
        for (auto [u, v] : ts.graph.edges())
            if (side[u] == side[v] || (side[u] != 0 && side[u] != 1) || (side[v] != 0 && side[v] != 1))
                throw PreconditionError("supplied sides are not a bipartition");
    }
    const Vertex x1 = n, x2 = n + 1, x3 = n + 2, y1 = n + 3, y2 = n + 4, y3 = n + 5;
    auto edges = ts.graph.edges();
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, side[v] == 0 ? y1 : x1);
    for (Vertex y : {y1, y2, y3})
        edges.emplace_back(x1, y);
    for (Vertex x : {x2, x3})
        edges.emplace_back(x, y1);
    const int total = n + 6;
    const int k = total - static_cast<int>(ts.is.size()) - 3;
    auto ones = [&](const std::vector<Vertex>& set) {
        auto m = mark(total, set);
        for (Vertex v : {x2, x3, y2, y3})
            m[v] = true;
        return one_plus_distinct(total, m);
    };
    Instance out{Graph(total, edges), k, Coloring(k, ones(ts.is)), Coloring(k, ones(ts.it))};
    if (layout) {
        const char* names[] = {"x1", "x2", "x3", "y1", "y2", "y3"};
        for (int i = 0; i < 6; ++i)
            layout->roles.emplace_back(names[i], n + i);
    }
    require_proper(out);
    return out;
}

Instance svr_to_kcrcs(const SVRInstance& svr, GadgetLayout* layout)
{
    const int n = svr.graph.n(), k = svr.k;
    if (k < 1)
        throw PreconditionError("palette size must be positive");
    Coloring gs = svr.gs, gt = svr.gt;
    gs.k = gt.k = k;
    check_well_formed(svr.graph, gs, false);
    check_well_formed(svr.graph, gt, false);
    InstanceBuilder b;
    b.k = k;
    b.edges = svr.graph.edges();
    for (Vertex v = 0; v < n; ++v)
        b.add_vertex(gs[v], gt[v]);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> clique{v};
        std::vector<Color> rest_s, rest_t;
        for (Color c = 1; c <= k; ++c) {
            if (c != gs[v])
                rest_s.push_back(c);
            if (c != gt[v])
                rest_t.push_back(c);
        }
        for (int j = 0; j < k - 1; ++j) {
            const Vertex w = b.add_vertex(rest_s[j], rest_t[j]);
            if (layout)
                layout->roles.emplace_back("C" + std::to_string(v) + "." + std::to_string(j + 1), w);
            clique.push_back(w);
        }
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                b.add_edge(clique[i], clique[j]);
    }
    Instance out = b.build();
    require_proper(out);
    return out;
}

void attach_forbidden_pendant(InstanceBuilder& b, Vertex x, Color c, GadgetLayout& layout, const std::string& prefix)
{
    if (c != 1 && c != 3)
        throw PreconditionError("forbidden pendants exist for colors 1 and 3 only");
    static const Color cycle1[] = {1, 2, 1, 3};
    static const Color cycle3[] = {3, 1, 3, 2};
    const Color* cyc = c == 1 ? cycle1 : cycle3;
    Vertex ids[4];
    const char* names[] = {".y", ".p1", ".p2", ".p3"};
    for (int i = 0; i < 4; ++i) {
        ids[i] = b.add_vertex(cyc[i], cyc[i]);
        layout.roles.emplace_back(prefix + names[i], ids[i]);
        layout.pendant_vertices.push_back(ids[i]);
    }
    for (int i = 0; i < 4; ++i)
        b.add_edge(ids[i], ids[(i + 1) % 4]);
    b.add_edge(x, ids[0]);
}

namespace {

struct Gadget {
    NclType type;
    std::vector<Vertex> core;  // AND: u_0, u_2^1, u_1^1..3; OR: v_1^i..v_4^i, i-major
    std::vector<Vertex> ports; // AND: weight-2 port first
};

constexpr Color kUnset = -1;

Gadget add_gadget(InstanceBuilder& b, GadgetLayout& layout, NclType type, const std::string& prefix)
{
    Gadget g{type, {}, {}};
    auto add = [&](const std::string& role) {
        const Vertex v = b.add_vertex(kUnset, kUnset);
        layout.roles.emplace_back(prefix + "." + role, v);
        g.core.push_back(v);
        return v;
    };
    if (type == NclType::And) {
        const Vertex u0 = add("u_0"), u21 = add("u_2^1");
        Vertex u1[3];
        for (int i = 0; i < 3; ++i)
            u1[i] = add("u_1^" + std::to_string(i + 1));
        b.add_edge(u1[0], u21);
        b.add_edge(u21, u0);
        b.add_edge(u0, u1[1]);
        b.add_edge(u0, u1[2]);
        for (int i = 0; i < 3; ++i) {
            attach_forbidden_pendant(b, u1[i], 3, layout, prefix + ".u_1^" + std::to_string(i + 1) + ".pendant");
            g.ports.push_back(u1[i]);
        }
    } else {
        Vertex v[3][4];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j)
                v[i][j] = add("v_" + std::to_string(j + 1) + "^" + std::to_string(i + 1));
        for (int i = 0; i < 3; ++i) {
            b.add_edge(v[i][0], v[(i + 1) % 3][0]);
            for (int j = 0; j < 3; ++j)
                b.add_edge(v[i][j], v[i][j + 1]);
        }
        for (int i = 0; i < 3; ++i) {
            const std::string sup = "^" + std::to_string(i + 1);
            attach_forbidden_pendant(b, v[i][1], 1, layout, prefix + ".v_2" + sup + ".pendant");
            attach_forbidden_pendant(b, v[i][2], 1, layout, prefix + ".v_3" + sup + ".pendant");
            attach_forbidden_pendant(b, v[i][3], 3, layout, prefix + ".v_4" + sup + ".pendant");
            g.ports.push_back(v[i][3]);
        }
    }
    return g;
}

bool complete(const Graph& g, std::vector<Color>& f, const std::vector<Vertex>& free, std::size_t i)
{
    if (i == free.size())
        return true;
    const Vertex v = free[i];
    for (Color c = 1; c <= 3; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(v))
            ok = ok && f[w] != c;
        if (!ok)
            continue;
        f[v] = c;
        if (complete(g, f, free, i + 1))
            return true;
    }
    f[v] = kUnset;
    return false;
}

// Ports must already be colored.
void fill_internals(const Graph& graph, std::vector<Color>& f, const Gadget& g)
{
    if (g.type == NclType::And) {
        const Vertex u0 = g.core[0], u21 = g.core[1];
        for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 2}}) {
            f[u21] = a;
            f[u0] = b;
            bool ok = true;
            for (Vertex v : {u0, u21})
                for (Vertex w : graph.neighbors(v))
                    ok = ok && f[w] != f[v];
            if (ok)
                return;
        }
        throw PreconditionError("AND gadget has no consistent internal coloring for this orientation");
    }
    std::vector<Vertex> free;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            free.push_back(g.core[static_cast<std::size_t>(i) * 4 + j]);
    for (Vertex v : free)
        f[v] = kUnset;
    if (!complete(graph, f, free, 0))
        throw PreconditionError("OR gadget has no consistent internal coloring for this orientation");
}

} // namespace

std::pair<Instance, GadgetLayout> ncl_to_3crcs(const NclMachine& machine, const NclOrientation& cs,
                                               const NclOrientation& ct)
{
    check_ncl_machine(machine);
    if (!is_valid_orientation(machine, cs) || !is_valid_orientation(machine, ct))
        throw PreconditionError("NCL orientation violates an in-weight constraint");

    InstanceBuilder b;
    b.k = 3;
    GadgetLayout layout;
    std::vector<Gadget> gadgets;
    // port_of[vertex][edge index] -> port vertex
    std::vector<std::vector<std::pair<int, Vertex>>> port_of(machine.vertices.size());
    for (std::size_t a = 0; a < machine.vertices.size(); ++a) {
        const NclType type = machine.vertices[a];
        gadgets.push_back(add_gadget(b, layout, type, "m" + std::to_string(a)));
        auto inc = machine.incident(static_cast<int>(a));
        if (type == NclType::And)
            std::stable_partition(inc.begin(), inc.end(), [&](int e) { return machine.edges[e].weight == 2; });
        for (std::size_t i = 0; i < 3; ++i)
            port_of[a].emplace_back(inc[i], gadgets.back().ports[i]);
    }
    auto port = [&](int a, int e) {
        for (auto [idx, v] : port_of[a])
            if (idx == e)
                return v;
        return Vertex{-1};
    };
    for (std::size_t e = 0; e < machine.edges.size(); ++e) {
        const auto& me = machine.edges[e];
        const Vertex pu = port(me.u, static_cast<int>(e)), pv = port(me.v, static_cast<int>(e));
        b.add_edge(pu, pv);
        layout.ports.push_back({me.id, pu, pv});
        b.fs[pu] = cs.toward[e] == me.u ? 1 : 2;
        b.fs[pv] = cs.toward[e] == me.v ? 1 : 2;
        b.ft[pu] = ct.toward[e] == me.u ? 1 : 2;
        b.ft[pv] = ct.toward[e] == me.v ? 1 : 2;
    }
    const Graph graph(b.size(), b.edges);
    for (const Gadget& g : gadgets) {
        fill_internals(graph, b.fs, g);
        fill_internals(graph, b.ft, g);
    }
    Instance out = b.build();
    require_proper(out);
    return {std::move(out), std::move(layout)};
}

StandaloneGadget standalone_gadget(NclType type)
{
    InstanceBuilder b;
    b.k = 3;
    StandaloneGadget s;
    const Gadget g = add_gadget(b, s.layout, type, "g");
    s.ports = g.ports;
    s.port_weights = type == NclType::And ? std::vector<int>{2, 1, 1} : std::vector<int>{2, 2, 2};
    for (int i = 0; i < 3; ++i) {
        const std::string name = "partner" + std::to_string(i + 1);
        const Vertex p = b.add_vertex(kUnset, kUnset);
        s.layout.roles.emplace_back(name, p);
        attach_forbidden_pendant(b, p, 3, s.layout, name + ".pendant");
        b.add_edge(g.ports[i], p);
        s.partners.push_back(p);
        s.layout.ports.push_back({i + 1, g.ports[i], p});
    }
    s.graph = Graph(b.size(), b.edges);
    s.fixed = b.fs;
    for (Vertex v = 0; v < b.size(); ++v)
        if (b.fs[v] == kUnset)
            s.free.push_back(v);
    return s;
}

Coloring standalone_coloring(const StandaloneGadget& s, NclType type, const std::vector<bool>& inward)
{
    std::vector<Color> f = s.fixed;
    for (std::size_t i = 0; i < 3; ++i) {
        f[s.ports[i]] = inward[i] ? 1 : 2;
        f[s.partners[i]] = inward[i] ? 2 : 1;
    }
    Gadget g{type, {}, s.ports};
    for (const auto& [name, v] : s.layout.roles)
        if (name.rfind("g.", 0) == 0 && name.find(".pendant") == std::string::npos)
            g.core.push_back(v);
    std::sort(g.core.begin(), g.core.end());
    fill_internals(s.graph, f, g);
    return Coloring(3, std::move(f));
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Agree:
        return "agree";
    case Verdict::Disagree:
        return "disagree";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

Verdict verify_reduction(Outcome source, Outcome reduced)
{
    if (source == Outcome::Overflow || reduced == Outcome::Overflow)
        return Verdict::Inconclusive;
    return source == reduced ? Verdict::Agree : Verdict::Disagree;
}

} // namespace crcs::reduce
