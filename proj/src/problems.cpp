#include "crcs/problems.hpp"

#include <algorithm>

#include "crcs/errors.hpp"

namespace crcs {

bool is_independent(const Graph& g, const std::vector<Vertex>& set)
{
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.has_edge(set[i], set[j]))
                return false;
    return true;
}

void check_token_sliding(const TokenSlidingInstance& ts)
{
    for (const auto* set : {&ts.is, &ts.it})
        for (Vertex v : *set)
            if (v < 0 || v >= ts.graph.n())
                throw IllFormedInput("token on vertex " + std::to_string(v) + " outside the graph");
    if (ts.is.size() != ts.it.size())
        throw PreconditionError("token sets differ in size");
    if (!is_independent(ts.graph, ts.is) || !is_independent(ts.graph, ts.it))
        throw PreconditionError("token sets must be independent sets");
}

int NclMachine::edge_index(int id) const
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id)
            return static_cast<int>(i);
    return -1;
}

std::vector<int> NclMachine::incident(int v) const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == v || edges[i].v == v)
            out.push_back(static_cast<int>(i));
    return out;
}

void check_ncl_machine(const NclMachine& m)
{
    const int nv = static_cast<int>(m.vertices.size());
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const auto& e = m.edges[i];
        if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv)
            throw PreconditionError("NCL edge " + std::to_string(e.id) + " has an unknown endpoint");
        if (e.u == e.v)
            throw PreconditionError("NCL edge " + std::to_string(e.id) + " is a self-loop");
        if (e.weight != 1 && e.weight != 2)
            throw PreconditionError("NCL edge " + std::to_string(e.id) + " has weight outside {1,2}");
        if (i > 0 && m.edges[i - 1].id >= e.id)
            throw PreconditionError("NCL edges must have distinct ids in ascending order");
    }
    for (int v = 0; v < nv; ++v) {
        auto inc = m.incident(v);
        if (inc.size() != 3)
            throw PreconditionError("NCL vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(inc.size()) + ", expected 3");
        std::vector<int> w;
        for (int i : inc)
            w.push_back(m.edges[i].weight);
        std::sort(w.begin(), w.end());
        const bool ok = m.vertices[v] == NclType::And ? w == std::vector<int>{1, 1, 2} : w == std::vector<int>{2, 2, 2};
        if (!ok)
            throw PreconditionError("NCL vertex " + std::to_string(v) + " (" + to_string(m.vertices[v]) +
                                    ") has incident weights inconsistent with its type");
    }
}

bool is_valid_orientation(const NclMachine& m, const NclOrientation& c)
{
    if (c.toward.size() != m.edges.size())
        return false;
    std::vector<int> in(m.vertices.size(), 0);
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        const auto& e = m.edges[i];
        if (c.toward[i] != e.u && c.toward[i] != e.v)
            return false;
        in[c.toward[i]] += e.weight;
    }
    return std::all_of(in.begin(), in.end(), [](int w) { return w >= 2; });
}

std::string to_string(NclType t)
{
    return t == NclType::And ? "and" : "or";
}

} // namespace crcs
