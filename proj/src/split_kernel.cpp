#include "crcs/split_kernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "crcs/errors.hpp"
#include "crcs/oracle.hpp"

namespace crcs::split {

SplitPartition split_partition(const Graph& g)
{
    const int n = g.n();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i)
            m = i + 1;
    long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
    for (int i = 0; i < n; ++i)
        (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != rhs)
        throw NotSplit();

    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + m);
    p.independent.assign(order.begin() + m, order.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());
    for (std::size_t i = 0; i < p.clique.size(); ++i)
        for (std::size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.has_edge(p.clique[i], p.clique[j]))
                throw NotSplit();
    for (Vertex v : p.independent)
        for (Vertex w : g.neighbors(v))
            if (std::binary_search(p.independent.begin(), p.independent.end(), w))
                throw NotSplit();
    // Grow I by a clique vertex without neighbors in I, so twins in I are
    // seen together.
    if (!p.independent.empty()) {
        for (auto it = p.clique.begin(); it != p.clique.end(); ++it) {
            if (g.degree(*it) + 1 != static_cast<int>(p.clique.size()))
                continue;
            p.independent.insert(std::lower_bound(p.independent.begin(), p.independent.end(), *it), *it);
            p.clique.erase(it);
            break;
        }
    }
    return p;
}

namespace {

using ClassKey = std::pair<std::vector<Vertex>, Color>;

// Classes of I by (neighborhood, f_s color); members ascending, classes
// ordered by smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Instance& instance, const SplitPartition& part)
{
    std::map<ClassKey, std::size_t> index;
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : part.independent) {
        auto nb = instance.graph.neighbors(v);
        ClassKey key{{nb.begin(), nb.end()}, instance.fs[v]};
        auto [it, fresh] = index.try_emplace(std::move(key), classes.size());
        if (fresh)
            classes.emplace_back();
        classes[it->second].push_back(v);
    }
    return classes;
}

Instance remove_vertex(const Instance& instance, Vertex w, std::vector<Vertex>& kept)
{
    const int n = instance.graph.n();
    kept.clear();
    for (Vertex v = 0; v < n; ++v)
        if (v != w)
            kept.push_back(v);
    return {instance.graph.induced(kept), instance.k, instance.fs.restrict_to(kept), instance.ft.restrict_to(kept)};
}

SplitPartition drop_vertex(const SplitPartition& part, Vertex w)
{
    SplitPartition out;
    for (Vertex v : part.clique)
        if (v != w)
            out.clique.push_back(v > w ? v - 1 : v);
    for (Vertex v : part.independent)
        if (v != w)
            out.independent.push_back(v > w ? v - 1 : v);
    return out;
}

} // namespace

bool apply_rule1(const Instance& instance, const SplitPartition& part)
{
    for (const auto& cls : twin_classes(instance, part)) {
        if (cls.size() < 2)
            continue;
        for (Vertex v : cls)
            if (instance.fs[v] != instance.ft[v])
                return true;
    }
    return false;
}

std::optional<Rule2Result> apply_rule2(const Instance& instance, const SplitPartition& part)
{
    for (const auto& cls : twin_classes(instance, part)) {
        if (cls.size() < 3)
            continue;
        Rule2Result r;
        r.removed = cls.back();
        r.instance = remove_vertex(instance, r.removed, r.kept);
        return r;
    }
    return std::nullopt;
}

KernelResult kernelize(const Instance& instance)
{
    SplitPartition part = split_partition(instance.graph);
    KernelResult out;
    out.instance = instance;
    out.kept.resize(static_cast<std::size_t>(instance.graph.n()));
    std::iota(out.kept.begin(), out.kept.end(), 0);
    while (true) {
        if (apply_rule1(out.instance, part)) {
            out.no = true;
            return out;
        }
        auto r = apply_rule2(out.instance, part);
        if (!r)
            return out;
        out.removed.push_back(out.kept[r->removed]);
        part = drop_vertex(part, r->removed);
        std::vector<Vertex> kept;
        for (Vertex v : r->kept)
            kept.push_back(out.kept[v]);
        out.kept = std::move(kept);
        out.instance = std::move(r->instance);
    }
}

std::size_t kernel_bound(int k)
{
    return static_cast<std::size_t>(k) + 2 * static_cast<std::size_t>(k) * (std::size_t{1} << k);
}

bool solve_split(const Instance& instance)
{
    check_well_formed(instance.graph, instance.fs, false);
    check_well_formed(instance.graph, instance.ft, false);
    if (!is_proper(instance.graph, instance.fs) || !is_proper(instance.graph, instance.ft))
        throw PreconditionError("instance colorings must be proper");
    if (!is_valid(instance))
        return false;
    const KernelResult kr = kernelize(instance);
    if (kr.no)
        return false;
    SearchBudget budget;
    double states = 1;
    for (int i = 0; i < kr.instance.graph.n() && states < static_cast<double>(budget.max_states); ++i)
        states *= kr.instance.k;
    budget.max_states = static_cast<std::size_t>(std::min(states, static_cast<double>(budget.max_states)));
    const Decision d = crcs_reachable(kr.instance, budget);
    if (d.overflow())
        throw BudgetExhausted("kernel search exceeded " + std::to_string(budget.max_states) + " states");
    return d.yes();
}

} // namespace crcs::split
