#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "crcs/core.hpp"
#include "crcs/problems.hpp"

namespace crcs {

enum class Outcome { Yes, No, Overflow };

const char* to_string(Outcome o);

struct SearchBudget {
    std::size_t max_states = 10'000'000;
    std::size_t max_moves = std::numeric_limits<std::size_t>::max();
};

/// Result of an exhaustive breadth-first search. On Yes, `witness` is a
/// shortest move sequence from the start state to the target.
template <class Move>
struct SearchResult {
    Outcome outcome = Outcome::No;
    std::vector<Move> witness;
    std::size_t states_explored = 0;

    bool yes() const { return outcome == Outcome::Yes; }
    bool no() const { return outcome == Outcome::No; }
    bool overflow() const { return outcome == Outcome::Overflow; }
};

struct Slide {
    Vertex from = 0;
    Vertex to = 0;
    friend bool operator==(const Slide&, const Slide&) = default;
};

struct Recolor {
    Vertex vertex = 0;
    Color color = 0;
    friend bool operator==(const Recolor&, const Recolor&) = default;
};

struct Flip {
    int edge_id = 0;
    friend bool operator==(const Flip&, const Flip&) = default;
};

using Decision = SearchResult<SwapMove>;

/// Reachability under color swaps for plain instances. Invalid instances are
/// answered No without searching.
Decision crcs_reachable(const Instance& instance, const SearchBudget& budget = {});

/// Same search over extended colorings (kStar allowed).
Decision ecrcs_reachable(const Instance& instance, const SearchBudget& budget = {});

SearchResult<Slide> ts_reachable(const TokenSlidingInstance& ts, const SearchBudget& budget = {});

SearchResult<Recolor> svr_reachable(const SVRInstance& svr, const SearchBudget& budget = {});

SearchResult<Flip> ncl_reachable(const NclMachine& machine, const NclOrientation& cs, const NclOrientation& ct,
                                 const SearchBudget& budget = {});

/// All proper k-colorings of a graph, partitioned into swap components.
struct ComponentPartition {
    bool overflow = false;
    std::vector<Coloring> colorings;   // lexicographic order
    std::vector<int> component_of;     // per coloring
    int component_count = 0;
};

ComponentPartition crcs_components(const Graph& g, int k, const SearchBudget& budget = {});

/// Enumerates proper (or extended-proper with `allow_star`) k-colorings in
/// lexicographic order, stopping after `limit`. Returns false on truncation.
bool enumerate_colorings(const Graph& g, int k, bool allow_star, std::size_t limit, std::vector<Coloring>& out);

/// The witness of a Yes decision as a sequence starting at instance.fs.
ReconfSequence witness_sequence(const Instance& instance, const Decision& d);

} // namespace crcs
