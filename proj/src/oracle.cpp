#include "crcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "crcs/errors.hpp"

namespace crcs {

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Yes:
        return "YES";
    case Outcome::No:
        return "NO";
    case Outcome::Overflow:
        return "OVERFLOW";
    }
    return "?";
}

namespace {

using State = std::vector<std::uint8_t>;

// States are small byte vectors. When they fit, they are packed into a
// 64-bit key; otherwise the raw bytes serve as the key.
struct PackedCodec {
    int bits;
    std::uint64_t operator()(const std::uint8_t* s, std::size_t len) const
    {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < len; ++i)
            key = (key << bits) | s[i];
        return key;
    }
};

struct BytesCodec {
    std::string operator()(const std::uint8_t* s, std::size_t len) const
    {
        return std::string(reinterpret_cast<const char*>(s), len);
    }
};

template <class Move, class Codec, class Expand>
SearchResult<Move> bfs_impl(const State& start, const State& target, const SearchBudget& budget, Codec codec,
                            Expand&& expand)
{
    using Key = decltype(codec(start.data(), start.size()));
    SearchResult<Move> result;
    const std::size_t len = start.size();

    if (start == target) {
        result.outcome = Outcome::Yes;
        result.states_explored = 1;
        return result;
    }

    std::vector<std::uint8_t> arena(start);
    std::vector<std::uint32_t> parent{0};
    std::vector<std::uint32_t> depth{0};
    std::vector<Move> via(1);
    std::unordered_set<Key> seen;
    seen.insert(codec(start.data(), len));

    bool truncated = false;
    State cur(len);
    for (std::size_t head = 0; head < parent.size(); ++head) {
        if (depth[head] >= budget.max_moves) {
            truncated = true;
            continue;
        }
        std::copy_n(arena.begin() + static_cast<std::ptrdiff_t>(head * len), len, cur.begin());
        bool found = false;
        bool full = false;
        expand(cur, [&](const Move& m, const State& next) {
            if (found || full)
                return;
            auto key = codec(next.data(), len);
            if (seen.contains(key))
                return;
            if (parent.size() >= budget.max_states) {
                full = true;
                return;
            }
            seen.insert(std::move(key));
            arena.insert(arena.end(), next.begin(), next.end());
            parent.push_back(static_cast<std::uint32_t>(head));
            depth.push_back(depth[head] + 1);
            via.push_back(m);
            if (next == target)
                found = true;
        });
        if (found) {
            result.outcome = Outcome::Yes;
            result.states_explored = parent.size();
            for (std::size_t at = parent.size() - 1; at != 0; at = parent[at])
                result.witness.push_back(via[at]);
            std::reverse(result.witness.begin(), result.witness.end());
            return result;
        }
        if (full) {
            result.outcome = Outcome::Overflow;
            result.states_explored = parent.size();
            return result;
        }
    }
    result.outcome = truncated ? Outcome::Overflow : Outcome::No;
    result.states_explored = parent.size();
    return result;
}

template <class Move, class Expand>
SearchResult<Move> bfs(const State& start, const State& target, int max_value, const SearchBudget& budget,
                       Expand&& expand)
{
    if (budget.max_states == 0 || budget.max_moves == 0)
        throw PreconditionError("search budget limits must be positive");
    const int bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(max_value))));
    if (static_cast<std::size_t>(bits) * start.size() <= 64)
        return bfs_impl<Move>(start, target, budget, PackedCodec{bits}, expand);
    return bfs_impl<Move>(start, target, budget, BytesCodec{}, expand);
}

State to_state(const Coloring& f)
{
    if (f.k > 255)
        throw IllFormedInput("the search oracles support at most 255 colors");
    return State(f.colors.begin(), f.colors.end());
}

Decision swap_search(const Instance& instance, const SearchBudget& budget)
{
    const Graph& g = instance.graph;
    if (!is_valid(instance))
        return {};
    const auto edges = g.edges();
    std::vector<Color> scratch(static_cast<std::size_t>(g.n()));
    return bfs<SwapMove>(to_state(instance.fs), to_state(instance.ft), instance.k, budget,
                         [&](const State& s, auto&& emit) {
                             std::copy(s.begin(), s.end(), scratch.begin());
                             State next = s;
                             for (auto [u, v] : edges) {
                                 if (!swap_is_legal(g, scratch, u, v))
                                     continue;
                                 std::swap(next[u], next[v]);
                                 emit(SwapMove(u, v), next);
                                 std::swap(next[u], next[v]);
                             }
                         });
}

void check_instance_shape(const Instance& instance)
{
    if (instance.fs.k != instance.k || instance.ft.k != instance.k)
        throw IllFormedInput("coloring palette differs from the instance's k");
}

} // namespace

Decision crcs_reachable(const Instance& instance, const SearchBudget& budget)
{
    check_instance_shape(instance);
    if (!is_proper(instance.graph, instance.fs) || !is_proper(instance.graph, instance.ft))
        throw PreconditionError("crcs_reachable requires proper colorings");
    return swap_search(instance, budget);
}

Decision ecrcs_reachable(const Instance& instance, const SearchBudget& budget)
{
    check_instance_shape(instance);
    if (!is_proper_extended(instance.graph, instance.fs) || !is_proper_extended(instance.graph, instance.ft))
        throw PreconditionError("ecrcs_reachable requires extended-proper colorings");
    return swap_search(instance, budget);
}

SearchResult<Slide> ts_reachable(const TokenSlidingInstance& ts, const SearchBudget& budget)
{
    check_token_sliding(ts);
    const Graph& g = ts.graph;
    State start(static_cast<std::size_t>(g.n()), 0), target(start);
    for (Vertex v : ts.is)
        start[v] = 1;
    for (Vertex v : ts.it)
        target[v] = 1;
    return bfs<Slide>(start, target, 1, budget, [&](const State& s, auto&& emit) {
        State next = s;
        for (Vertex u = 0; u < g.n(); ++u) {
            if (!s[u])
                continue;
            for (Vertex w : g.neighbors(u)) {
                if (s[w])
                    continue;
                bool free = true;
                for (Vertex x : g.neighbors(w))
                    if (x != u && s[x]) {
                        free = false;
                        break;
                    }
                if (!free)
                    continue;
                next[u] = 0;
                next[w] = 1;
                emit(Slide{u, w}, next);
                next[u] = 1;
                next[w] = 0;
            }
        }
    });
}

SearchResult<Recolor> svr_reachable(const SVRInstance& svr, const SearchBudget& budget)
{
    const Graph& g = svr.graph;
    if (svr.gs.k != svr.k || svr.gt.k != svr.k)
        throw IllFormedInput("coloring palette differs from the instance's k");
    if (!is_proper(g, svr.gs) || !is_proper(g, svr.gt))
        throw PreconditionError("svr_reachable requires proper colorings");
    return bfs<Recolor>(to_state(svr.gs), to_state(svr.gt), svr.k, budget, [&](const State& s, auto&& emit) {
        State next = s;
        for (Vertex v = 0; v < g.n(); ++v) {
            for (Color c = 1; c <= svr.k; ++c) {
                if (c == s[v])
                    continue;
                bool ok = true;
                for (Vertex w : g.neighbors(v))
                    if (s[w] == c) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                next[v] = static_cast<std::uint8_t>(c);
                emit(Recolor{v, c}, next);
                next[v] = s[v];
            }
        }
    });
}

SearchResult<Flip> ncl_reachable(const NclMachine& machine, const NclOrientation& cs, const NclOrientation& ct,
                                 const SearchBudget& budget)
{
    check_ncl_machine(machine);
    if (!is_valid_orientation(machine, cs) || !is_valid_orientation(machine, ct))
        throw PreconditionError("NCL configurations must give every vertex incoming weight >= 2");
    const auto& edges = machine.edges;
    auto encode = [&](const NclOrientation& c) {
        State s(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
            s[i] = c.toward[i] == edges[i].v ? 1 : 0;
        return s;
    };
    std::vector<int> in(machine.vertices.size());
    return bfs<Flip>(encode(cs), encode(ct), 1, budget, [&](const State& s, auto&& emit) {
        std::fill(in.begin(), in.end(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i)
            in[s[i] ? edges[i].v : edges[i].u] += edges[i].weight;
        State next = s;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const int head = s[i] ? edges[i].v : edges[i].u;
            if (in[head] - edges[i].weight < 2)
                continue;
            next[i] ^= 1;
            emit(Flip{edges[i].id}, next);
            next[i] ^= 1;
        }
    });
}

bool enumerate_colorings(const Graph& g, int k, bool allow_star, std::size_t limit, std::vector<Coloring>& out)
{
    const int n = g.n();
    std::vector<Color> f(static_cast<std::size_t>(n), -1);
    const Color lo = allow_star ? kStar : 1;
    bool complete = true;
    // Iterative backtracking in vertex order; colors tried in ascending order.
    int v = 0;
    if (n == 0) {
        if (limit == 0)
            return false;
        out.emplace_back(k, std::vector<Color>{});
        return true;
    }
    while (v >= 0) {
        Color c = f[v] < lo ? lo : f[v] + 1;
        for (; c <= k; ++c) {
            bool ok = true;
            if (c != kStar)
                for (Vertex w : g.neighbors(v))
                    if (w < v && f[w] == c) {
                        ok = false;
                        break;
                    }
            if (ok)
                break;
        }
        if (c > k) {
            f[v] = -1;
            --v;
            continue;
        }
        f[v] = c;
        if (v == n - 1) {
            if (out.size() >= limit) {
                complete = false;
                break;
            }
            out.emplace_back(k, f);
        } else {
            ++v;
        }
    }
    return complete;
}

ComponentPartition crcs_components(const Graph& g, int k, const SearchBudget& budget)
{
    ComponentPartition part;
    if (!enumerate_colorings(g, k, false, budget.max_states, part.colorings)) {
        part.overflow = true;
        part.colorings.clear();
        return part;
    }
    const std::size_t count = part.colorings.size();
    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(count * 2);
    auto key = [](const std::vector<Color>& c) {
        std::string s(c.size(), '\0');
        for (std::size_t i = 0; i < c.size(); ++i)
            s[i] = static_cast<char>(c[i]);
        return s;
    };
    for (std::size_t i = 0; i < count; ++i)
        index.emplace(key(part.colorings[i].colors), static_cast<std::uint32_t>(i));

    std::vector<std::uint32_t> uf(count);
    std::iota(uf.begin(), uf.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (uf[x] != x)
            x = uf[x] = uf[uf[x]];
        return x;
    };
    const auto edges = g.edges();
    for (std::size_t i = 0; i < count; ++i) {
        auto cur = part.colorings[i].colors;
        for (auto [u, v] : edges) {
            if (!swap_is_legal(g, cur, u, v))
                continue;
            std::swap(cur[u], cur[v]);
            const auto j = index.at(key(cur));
            std::swap(cur[u], cur[v]);
            auto a = find(static_cast<std::uint32_t>(i)), b = find(j);
            if (a != b)
                uf[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> label(count, -1);
    part.component_of.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto r = find(static_cast<std::uint32_t>(i));
        if (label[r] < 0)
            label[r] = part.component_count++;
        part.component_of[i] = label[r];
    }
    return part;
}

ReconfSequence witness_sequence(const Instance& instance, const Decision& d)
{
    return ReconfSequence{instance.fs, d.witness};
}

} // namespace crcs
