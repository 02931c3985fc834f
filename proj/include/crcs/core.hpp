#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "crcs/graph.hpp"

namespace crcs {

/// Colors are 1-based; kStar is the flexible color of extended colorings.
using Color = int;
inline constexpr Color kStar = 0;

/// A vertex -> color map together with its palette size k. Properness is
/// checked by is_proper / is_proper_extended, not enforced here.
struct Coloring {
    int k = 0;
    std::vector<Color> colors;

    Coloring() = default;
    Coloring(int k, std::vector<Color> colors) : k(k), colors(std::move(colors)) {}

    int size() const { return static_cast<int>(colors.size()); }
    Color operator[](Vertex v) const { return colors[v]; }
    Color& operator[](Vertex v) { return colors[v]; }
    bool has_star() const;

    /// Restriction to `vertices`, in the given order.
    Coloring restrict_to(std::span<const Vertex> vertices) const;

    /// Number of vertices per color; index 0 counts kStar.
    std::vector<int> color_counts() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

std::string to_string(const Coloring& f);

/// (G, k, f_s, f_t). Extended iff either coloring uses kStar.
struct Instance {
    Graph graph;
    int k = 0;
    Coloring fs;
    Coloring ft;

    bool extended() const { return fs.has_star() || ft.has_star(); }
};

/// Exchange of the colors on the endpoints of edge uv; stored with u < v.
struct SwapMove {
    Vertex u = 0;
    Vertex v = 0;

    SwapMove() = default;
    SwapMove(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const SwapMove&, const SwapMove&) = default;
};

struct ReconfSequence {
    Coloring start;
    std::vector<SwapMove> moves;
};

/// Throws IllFormedInput if f has the wrong length or a color outside [k]
/// (or outside [k] plus kStar when allow_star).
void check_well_formed(const Graph& g, const Coloring& f, bool allow_star);

bool is_proper(const Graph& g, const Coloring& f);
bool is_proper_extended(const Graph& g, const Coloring& f);

/// Equal per-color counts between f_s and f_t, including kStar.
bool is_valid(const Instance& instance);

/// Edges whose swap yields a different, (extended-)proper coloring, sorted by
/// (min endpoint, max endpoint). Throws PreconditionError on improper input.
std::vector<SwapMove> legal_swaps(const Graph& g, const Coloring& f);

/// Allocation-free variant used by the state-space searches; `f` must already
/// be extended-proper.
bool swap_is_legal(const Graph& g, std::span<const Color> f, Vertex u, Vertex v);

/// Returns f with the colors of move.u and move.v exchanged. Throws
/// PreconditionError if the move is not a legal swap for f.
Coloring apply_swap(const Graph& g, const Coloring& f, SwapMove move);

/// Replays seq from seq.start, checking every move; returns the final coloring.
Coloring replay(const Graph& g, const ReconfSequence& seq);

/// Decides instances with k <= 2 component by component.
bool solve_k_le_2(const Instance& instance);

/// Swap sequence between two bijective colorings of a connected graph, at most
/// n(n-1) moves. Throws PreconditionError otherwise.
ReconfSequence route_bijective(const Graph& g, const Coloring& from, const Coloring& to);

} // namespace crcs
