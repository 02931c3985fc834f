#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crcs/core.hpp"
#include "crcs/oracle.hpp"
#include "crcs/problems.hpp"

namespace crcs::reduce {

/// Incrementally assembled CRCS instance; both colorings grow with the graph.
struct InstanceBuilder {
    int k = 0;
    std::vector<Edge> edges;
    std::vector<Color> fs;
    std::vector<Color> ft;

    Vertex add_vertex(Color s, Color t);
    void add_edge(Vertex u, Vertex v) { edges.emplace_back(u, v); }
    int size() const { return static_cast<int>(fs.size()); }
    Instance build() const;
};

struct PortEdge {
    int edge_id = 0;
    Vertex u = 0; // port of the edge's first endpoint
    Vertex v = 0;
};

/// Role name -> vertex id for every constructed vertex, plus the port edges
/// of an NCL construction.
struct GadgetLayout {
    std::vector<std::pair<std::string, Vertex>> roles;
    std::vector<PortEdge> ports;
    std::vector<Vertex> pendant_vertices;

    /// Vertex with this role, or -1.
    Vertex find(const std::string& role) const;
};

Instance ts_split_to_crcs(const TokenSlidingInstance& ts, GadgetLayout* layout = nullptr);
/// Uses ts.side as the bipartition when given, otherwise computes one.
Instance ts_bipartite_to_crcs(const TokenSlidingInstance& ts, GadgetLayout* layout = nullptr);
Instance svr_to_kcrcs(const SVRInstance& svr, GadgetLayout* layout = nullptr);

/// Hangs a rigid 4-cycle on x through a new neighbor y colored c (1 or 3),
/// so x can never take color c. Names the new vertices `<prefix>.y`,
/// `<prefix>.p1`..`<prefix>.p3`.
void attach_forbidden_pendant(InstanceBuilder& b, Vertex x, Color c, GadgetLayout& layout, const std::string& prefix);

std::pair<Instance, GadgetLayout> ncl_to_3crcs(const NclMachine& machine, const NclOrientation& cs,
                                               const NclOrientation& ct);

/// A single gadget with one partner port per port, each partner carrying its
/// own 3-forbidden pendant, as in the middle of a construction.
struct StandaloneGadget {
    Graph graph;
    GadgetLayout layout;
    std::vector<Vertex> ports;    // gadget side, in port order
    std::vector<Vertex> partners; // partners[i] is joined to ports[i]
    std::vector<Vertex> free;     // every non-pendant vertex
    std::vector<Color> fixed;     // pendant colors; -1 on free vertices
    std::vector<int> port_weights;
};

StandaloneGadget standalone_gadget(NclType type);

/// Coloring the construction assigns to a standalone gadget when port i's
/// edge points into the gadget iff inward[i].
Coloring standalone_coloring(const StandaloneGadget& g, NclType type, const std::vector<bool>& inward);

enum class Verdict { Agree, Disagree, Inconclusive };
const char* to_string(Verdict v);
Verdict verify_reduction(Outcome source, Outcome reduced);

} // namespace crcs::reduce
