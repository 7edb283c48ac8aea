#pragma once

// Small-graph enumeration and seeded random instances for sweeps.

#include "minorforge/core.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace minorforge {

using Rng = std::mt19937_64;

/// Canonical relabeling: the isomorphic copy with the smallest adjacency
/// code among vertex orders sorted by decreasing degree. n <= 10.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n
/// vertices, each in canonical form, in increasing code order. n <= 8.
std::vector<Graph> graphs_up_to_isomorphism(int n);

/// Every labeled graph on n vertices (2^(n choose 2) of them). n <= 8.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

/// G(n, 1/2) from the raw generator bits, so sequences do not depend on the
/// standard library's distribution implementations.
Graph random_graph(int n, Rng& rng);

/// Ground size uniform in [1, max_ground], 1..max_edges distinct non-empty
/// hyperedges drawn as random subsets.
Hypergraph random_hypergraph(int max_ground, int max_edges, Rng& rng);

/// Uniform integer in [lo, hi] by modulo reduction.
int uniform_int(Rng& rng, int lo, int hi);

}  // namespace minorforge
