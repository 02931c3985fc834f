#pragma once

#include <optional>
#include <vector>

#include "crcs/core.hpp"

namespace crcs::split {

struct SplitPartition {
    std::vector<Vertex> clique;      // ascending
    std::vector<Vertex> independent; // ascending
};

/// Degree-sequence recognition. When I is non-empty, a clique vertex with no
/// neighbor in I is moved to I, so I is maximal. Throws NotSplit.
SplitPartition split_partition(const Graph& g);

/// True iff some u, v in I share their neighborhood and f_s color while f_s
/// and f_t differ on u or on v.
bool apply_rule1(const Instance& instance, const SplitPartition& part);

/// Removes the highest-id vertex of the first (by smallest member) class of
/// three or more I-vertices sharing neighborhood and f_s color.
struct Rule2Result {
    Instance instance;
    Vertex removed = -1;     // id in the input instance
    std::vector<Vertex> kept; // new id -> input id
};
std::optional<Rule2Result> apply_rule2(const Instance& instance, const SplitPartition& part);

struct KernelResult {
    bool no = false;
    Instance instance;           // meaningful unless `no`
    std::vector<Vertex> removed; // original ids, in removal order
    std::vector<Vertex> kept;    // kernel id -> original id
};

KernelResult kernelize(const Instance& instance);

/// k + 2k * 2^k
std::size_t kernel_bound(int k);

/// Kernelizes, then searches the kernel exhaustively. Throws BudgetExhausted
/// if the search is cut short.
bool solve_split(const Instance& instance);

} // namespace crcs::split
