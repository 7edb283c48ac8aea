#pragma once

// Generators for Kneser-type graph families and the small building blocks
// (crown graphs, joins) used by the minor constructions.

#include "minorforge/core.hpp"

#include <vector>

namespace minorforge {

/// All r-subsets of {1..m} in lexicographic order.
std::vector<Label> subsets_of_size(int m, int r);

/// r-subsets of {1..m} with no two cyclically consecutive elements
/// (i, i+1 or m, 1), lexicographic order. r = 0 yields {∅}.
std::vector<Label> cyclically_stable_subsets(int m, int r);

/// K(n,k): k-subsets of [n], adjacent iff disjoint. Edgeless when n < 2k.
Graph kneser(int n, int k);

/// S(n,k): induced subgraph of K(n,k) on the cyclically stable k-subsets.
Graph schrijver(int n, int k);

/// KG(h): one vertex per hyperedge (labels = hyperedges), adjacent iff
/// the hyperedges are disjoint.
Graph kneser_graph(const Hypergraph& h);

/// A hypergraph h with kneser_graph(h) equal to g on identical vertex ids.
/// Ground elements 1..n stand for the vertices, n+1.. for the non-edges of g.
Hypergraph kneser_representation(const Graph& g);

/// K*_{n,n}: K_{n,n} minus a perfect matching. Vertex (x, side) has id
/// (side - 1) * n + (x - 1).
Graph crown(int n);

/// g1 + g2: disjoint union plus all cross edges, g1's ids first.
Graph join(const Graph& g1, const Graph& g2);

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

}  // namespace minorforge
