#pragma once

#include <string>
#include <vector>

#include "crcs/core.hpp"
#include "crcs/graph.hpp"

namespace crcs {

/// Token Sliding: independent sets of equal size; `side` optionally carries a
/// bipartition (0/1 per vertex) for the bipartite construction.
struct TokenSlidingInstance {
    Graph graph;
    std::vector<Vertex> is;
    std::vector<Vertex> it;
    std::vector<int> side;
};

bool is_independent(const Graph& g, const std::vector<Vertex>& set);

/// Throws PreconditionError unless both sets are independent, duplicate-free
/// and of equal size.
void check_token_sliding(const TokenSlidingInstance& ts);

/// Single-vertex recoloring instance.
struct SVRInstance {
    Graph graph;
    int k = 0;
    Coloring gs;
    Coloring gt;
};

enum class NclType { And, Or };

struct NclEdge {
    int id = 0;
    int u = 0;
    int v = 0;
    int weight = 0;
};

/// AND/OR constraint graph. Vertex ids are 0..vertices.size()-1, edges are
/// kept in ascending id order.
struct NclMachine {
    std::vector<NclType> vertices;
    std::vector<NclEdge> edges;

    /// Index into `edges` of the edge with this id, or -1.
    int edge_index(int id) const;
    /// Edge indices incident to v, in ascending edge id.
    std::vector<int> incident(int v) const;
};

/// For each edge (indexed like NclMachine::edges), the vertex it points to.
struct NclOrientation {
    std::vector<int> toward;

    friend bool operator==(const NclOrientation&, const NclOrientation&) = default;
};

/// Throws PreconditionError when a vertex does not have degree 3 or its
/// incident weights do not match its type.
void check_ncl_machine(const NclMachine& m);

/// True iff every vertex receives incoming weight at least 2.
bool is_valid_orientation(const NclMachine& m, const NclOrientation& c);

std::string to_string(NclType t);

} // namespace crcs
