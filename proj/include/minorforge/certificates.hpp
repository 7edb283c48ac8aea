#pragma once

// Certificates for clique minors and odd clique minors, their verifiers and
// exhaustive oracles for small graphs.

#include "minorforge/core.hpp"
#include "minorforge/limits.hpp"

#include <map>
#include <vector>

namespace minorforge {

/// An edge u-v of the host graph joining part `i` (containing u) to part `j`
/// (containing v), i < j. Parts are trees or branch sets, 0-based.
struct Link {
  int i = 0;
  int j = 0;
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Link&, const Link&) = default;
};

struct Tree {
  VertexSet vertices;
  std::vector<Edge> edges;
  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Odd K_k-expansion: k vertex-disjoint trees, a {1,2}-coloring that is
/// proper on each tree, and one monochromatic connector per pair of trees.
struct OddExpansion {
  std::vector<Tree> trees;
  std::map<Vertex, int> colors;
  std::vector<Link> connectors;

  int order() const { return static_cast<int>(trees.size()); }
};

/// K_k-minor model: k disjoint connected branch sets, one link per pair.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
  std::vector<Link> links;

  int order() const { return static_cast<int>(branch_sets.size()); }
};

ValidationReport verify_odd_expansion(const Graph& g, const OddExpansion& x);
ValidationReport verify_minor_model(const Graph& g, const MinorModel& m);

/// Trees become branch sets, connectors become links. The expansion must
/// be valid in g.
MinorModel expansion_to_minor_model(const Graph& g, const OddExpansion& x);

/// Largest k such that g contains an odd K_k-expansion.
int odd_clique_minor_number(const Graph& g, const Limits& limits = {});

/// Hadwiger number: largest k such that g has a K_k minor.
int clique_minor_number(const Graph& g, const Limits& limits = {});

}  // namespace minorforge
