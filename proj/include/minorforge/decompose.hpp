#pragma once

// Ordered partition of V(G) into connected bipartite parts X_1..X_n such
// that a vertex in a later part sees either nothing of an earlier part or
// both of its sides. Also derives the proper coloring that interleaves the
// part sides: 2i-1 on A_i, 2i on B_i.

#include "minorforge/core.hpp"

#include <vector>

namespace minorforge {

struct PartitionCertificate {
  std::vector<VertexSet> parts;
  std::vector<Bipartition> sides;

  /// vertex -> 0-based index of its part. Empty if the parts do not
  /// cover 0..order-1 exactly once.
  std::vector<int> part_index(int order) const;
};

/// Grows each part from the smallest remaining vertex, absorbing (smallest
/// first) any remaining vertex whose neighbors inside the part all lie on one
/// side. Self-verifies before returning.
PartitionCertificate bipartite_connected_partition(const Graph& g);

ValidationReport verify_partition(const Graph& g, const PartitionCertificate& p);

/// c(x) = 2i-1 on A_i and 2i on B_i (1-based part index i).
Coloring partition_coloring(const Graph& g, const PartitionCertificate& p);

/// BFS spanning tree of the connected g[part], rooted at its smallest vertex,
/// neighbors visited in increasing order.
std::vector<Edge> bfs_spanning_tree(const Graph& g, const VertexSet& part);

}  // namespace minorforge
