#pragma once

#include <string>
#include <vector>

#include "crcs/core.hpp"

namespace crcs::path {

/// Colors of a 3-colored path in path order, as characters '1'..'3'.
class ColoringString {
public:
    ColoringString() = default;
    /// Throws IllFormedInput on characters outside "123" or equal neighbors.
    explicit ColoringString(std::string chars);

    const std::string& str() const { return chars_; }
    std::size_t size() const { return chars_.size(); }
    bool empty() const { return chars_.empty(); }
    char operator[](std::size_t i) const { return chars_[i]; }

    friend auto operator<=>(const ColoringString&, const ColoringString&) = default;

private:
    std::string chars_;
};

/// Result of exhaustive contraction: a rigid string, or NIL (empty).
struct PathInvariant {
    std::string value;

    bool is_nil() const { return value.empty(); }
    friend bool operator==(const PathInvariant&, const PathInvariant&) = default;
};

/// Reads the coloring along the path, starting from the lower-id endpoint.
/// Throws WrongSolver if the graph is not a path or k != 3.
ColoringString string_of(const Graph& g, const Coloring& f);

/// Vertices of a path graph in order from the lower-id endpoint.
std::vector<Vertex> path_order(const Graph& g);

/// Whether positions i and i+1 (1-based i) can be exchanged.
bool is_swappable(const ColoringString& s, std::size_t i);

/// s with positions i and i+1 (1-based) exchanged.
ColoringString swapped(const ColoringString& s, std::size_t i);

/// Every string reachable by one C1, C2 or C3 contraction, deduplicated and
/// sorted.
std::vector<ColoringString> contractions(const ColoringString& s);

bool is_rigid(const ColoringString& s);

/// Linear-time stack evaluation of the contraction invariant.
PathInvariant invariant(const ColoringString& s);

/// Valid instance with equal invariants. Throws WrongSolver off-class.
bool solve_path(const Instance& instance);

} // namespace crcs::path
