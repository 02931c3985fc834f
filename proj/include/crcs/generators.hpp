#pragma once

#include <optional>
#include <random>
#include <vector>

#include "crcs/core.hpp"

namespace crcs::gen {

using Rng = std::mt19937_64;

Graph path_graph(int n);
/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);
/// Random spanning tree plus G(n, p) extra edges.
Graph random_connected_graph(int n, double p, Rng& rng);
/// Random binary cotree over a shuffled vertex set.
Graph random_cograph(int n, Rng& rng);
/// Clique of size at most max_clique (clamped to n) plus an independent set
/// with random neighborhoods, under a random labeling.
Graph random_split_graph(int n, int max_clique, Rng& rng);
/// Random bipartite graph; side[v] receives 0 or 1.
Graph random_bipartite_graph(int n, double p, Rng& rng, std::vector<int>& side);

/// Uniformly shuffled exhaustive backtracking; nullopt iff no proper
/// k-coloring exists. With star_prob > 0 each vertex first becomes kStar with
/// that probability.
std::optional<Coloring> random_proper_coloring(const Graph& g, int k, Rng& rng, double star_prob = 0.0);

/// A second coloring with the same color counts as `fs`: rejection sampling
/// over random colorings, falling back to a random walk of legal swaps.
Coloring random_valid_partner(const Graph& g, const Coloring& fs, Rng& rng, double star_prob = 0.0);

} // namespace crcs::gen
