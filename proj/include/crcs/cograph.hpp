#pragma once

#include <set>
#include <string>
#include <vector>

#include "crcs/core.hpp"

namespace crcs::cograph {

enum class NodeKind { Leaf, Union, Join };

/// Binary cotree stored as a node array; `root` indexes into `nodes`.
struct Cotree {
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        Vertex vertex = -1; // leaves only
        int left = -1;
        int right = -1;
    };

    std::vector<Node> nodes;
    int root = -1;

    /// Leaves below `node`, ascending.
    std::vector<Vertex> leaves(int node) const;
    /// Graph on `vertex_count` vertices realized by the tree.
    Graph evaluate(int vertex_count) const;
};

/// Recursive decomposition by connectivity of the graph and its complement.
/// Throws NotACograph when neither is disconnected on >= 2 vertices.
Cotree build_cotree(const Graph& g);

/// Parses "(J a (U b c))"-style text: U/J nodes with two or more children,
/// integers for leaves. Multiway nodes are split left-deep.
Cotree parse_cotree(const std::string& text);
std::string format_cotree(const Cotree& t);

/// Throws PreconditionError unless `t` realizes exactly `g`.
void check_cotree(const Cotree& t, const Graph& g);

using SwappableColors = std::set<Color>;

/// Colors used exactly once, plus kStar when used at all.
SwappableColors swappable_colors(const Coloring& f);

/// f restricted to `part` with every color in `swappable` replaced by kStar.
Coloring star_project(const Coloring& f, std::span<const Vertex> part, const SwappableColors& swappable);

/// Extended reconfiguration on the cograph realized by `t`; colorings are
/// indexed by graph vertex id.
bool solve_ecrcs_cograph(const Cotree& t, int k, const Coloring& fs, const Coloring& ft);

/// Plain instances; builds the cotree unless one is supplied.
bool solve_crcs_cograph(const Instance& instance);
bool solve_crcs_cograph(const Instance& instance, const Cotree& t);

} // namespace crcs::cograph
