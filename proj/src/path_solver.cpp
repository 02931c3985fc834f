#include "crcs/path_solver.hpp"

#include <algorithm>
#include <set>

#include "crcs/errors.hpp"

namespace crcs::path {

namespace {

bool distinct3(char a, char b, char c)
{
    return a != b && b != c && a != c;
}

} // namespace

ColoringString::ColoringString(std::string chars) : chars_(std::move(chars))
{
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        if (chars_[i] < '1' || chars_[i] > '3')
            throw IllFormedInput("coloring string character '" + std::string(1, chars_[i]) + "' is not 1, 2 or 3");
        if (i > 0 && chars_[i] == chars_[i - 1])
            throw IllFormedInput("coloring string \"" + chars_ + "\" repeats a character at position " +
                                 std::to_string(i + 1));
    }
}

std::vector<Vertex> path_order(const Graph& g)
{
    if (!is_path_graph(g))
        throw WrongSolver("graph is not a path");
    std::vector<Vertex> order;
    if (g.n() == 0)
        return order;
    Vertex start = 0;
    if (g.n() > 1)
        while (g.degree(start) != 1)
            ++start;
    Vertex prev = -1, cur = start;
    while (true) {
        order.push_back(cur);
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
            if (w != prev)
                next = w;
        if (next < 0)
            break;
        prev = cur;
        cur = next;
    }
    return order;
}

ColoringString string_of(const Graph& g, const Coloring& f)
{
    if (f.k != 3)
        throw WrongSolver("the path solver handles k = 3 only, got k = " + std::to_string(f.k));
    auto order = path_order(g);
    if (!is_proper(g, f))
        throw PreconditionError("coloring is not proper");
    std::string chars;
    for (Vertex v : order)
        chars.push_back(static_cast<char>('0' + f[v]));
    return ColoringString(std::move(chars));
}

bool is_swappable(const ColoringString& s, std::size_t i)
{
    const std::size_t n = s.size();
    if (i < 1 || i + 1 > n)
        throw PreconditionError("swap position " + std::to_string(i) + " out of range for length " +
                                std::to_string(n));
    if (n == 2)
        return true;
    if (i == 1)
        return distinct3(s[0], s[1], s[2]);
    if (i == n - 1)
        return distinct3(s[n - 3], s[n - 2], s[n - 1]);
    return s[i - 2] == s[i + 1];
}

ColoringString swapped(const ColoringString& s, std::size_t i)
{
    if (!is_swappable(s, i))
        throw PreconditionError("positions " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                " of \"" + s.str() + "\" are not swappable");
    std::string t = s.str();
    std::swap(t[i - 1], t[i]);
    return ColoringString(std::move(t));
}

std::vector<ColoringString> contractions(const ColoringString& s)
{
    std::set<std::string> out;
    const std::string& t = s.str();
    const std::size_t n = t.size();
    if (n < 3)
        return {};
    // C1: s_{i-1} s_i s_{i+1} s_{i+2} -> s_{i+2} when s_{i-1} = s_{i+2}, 2 <= i <= n-2.
    for (std::size_t i = 2; i + 2 <= n; ++i)
        if (t[i - 2] == t[i + 1])
            out.insert(t.substr(0, i - 2) + t.substr(i + 1));
    if (distinct3(t[0], t[1], t[2]))
        out.insert(t.substr(3));
    if (distinct3(t[n - 3], t[n - 2], t[n - 1]))
        out.insert(t.substr(0, n - 3));
    std::vector<ColoringString> result;
    for (const auto& x : out)
        result.emplace_back(x);
    return result;
}

bool is_rigid(const ColoringString& s)
{
    for (std::size_t i = 1; i < s.size(); ++i)
        if (is_swappable(s, i))
            return false;
    return true;
}

PathInvariant invariant(const ColoringString& s)
{
    std::string stack;
    stack.reserve(s.size());
    for (char c : s.str()) {
        stack.push_back(c);
        const std::size_t d = stack.size();
        if (d == 3 && distinct3(stack[0], stack[1], stack[2]))
            stack.clear(); // C2
        else if (d >= 4 && stack[d - 4] == c)
            stack.resize(d - 3); // C1
    }
    while (stack.size() >= 3) {
        const std::size_t d = stack.size();
        if (!distinct3(stack[d - 3], stack[d - 2], stack[d - 1]))
            break;
        stack.resize(d - 3); // C3
    }
    if (stack.size() <= 2)
        return {};
    return PathInvariant{stack};
}

bool solve_path(const Instance& instance)
{
    if (instance.k != 3)
        throw WrongSolver("the path solver handles k = 3 only, got k = " + std::to_string(instance.k));
    if (instance.extended())
        throw WrongSolver("the path solver does not accept extended colorings");
    const auto s = string_of(instance.graph, instance.fs);
    const auto t = string_of(instance.graph, instance.ft);
    if (!is_valid(instance))
        return false;
    return invariant(s) == invariant(t);
}

} // namespace crcs::path
