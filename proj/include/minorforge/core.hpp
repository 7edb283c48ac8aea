#pragma once

// Graph and hypergraph data model plus the elementary predicates the rest of
// the library is built on.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorforge {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending
using Edge = std::pair<Vertex, Vertex>;  // first < second
using Label = std::vector<int>;          // sorted ascending
using Bitset = boost::dynamic_bitset<>;

/// Malformed or precondition-violating input (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit was exceeded (CLI exit code 3).
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A construction failed its own verification. Always a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Named violations collected by the verifiers; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string what) { violations.push_back(std::move(what)); }
};

Edge make_edge(Vertex u, Vertex v);

/// Finite simple undirected graph on vertices 0..order-1.
///
/// Edges are stored once as sorted pairs and mirrored into per-vertex
/// adjacency bitsets. Optional labels attach a distinct sorted integer set
/// to every vertex (Kneser-family vertices are subsets of [n]).
class Graph {
public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::vector<Edge> edges,
        std::optional<std::vector<Label>> labels = std::nullopt);

  int order() const { return order_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<Label>>& labels() const { return labels_; }

  bool adjacent(Vertex u, Vertex v) const;
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  VertexSet neighbor_list(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(rows_[v].count()); }
  bool contains(Vertex v) const { return v >= 0 && v < order_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<Bitset> rows_;
  std::optional<std::vector<Label>> labels_;
};

/// Hypergraph on the 1-based ground set {1..ground}. Hyperedges are
/// distinct, non-empty, individually sorted and stored in lexicographic order.
class Hypergraph {
public:
  Hypergraph() = default;
  Hypergraph(int ground, std::vector<Label> hyperedges);

  int ground() const { return ground_; }
  const std::vector<Label>& hyperedges() const { return hyperedges_; }
  std::size_t size() const { return hyperedges_.size(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
  int ground_ = 0;
  std::vector<Label> hyperedges_;
};

/// Total map vertex -> positive color; index = vertex id.
struct Coloring {
  std::vector<int> colors;

  int operator()(Vertex v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }
  int max_color() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Unique bipartition of the connected induced subgraph g[s], smallest id
/// on side A, or nullopt if g[s] has an odd cycle.
std::optional<Bipartition> bipartition_of(const Graph& g, const VertexSet& s);

std::vector<VertexSet> connected_components(const Graph& g);

bool is_complete_between(const Graph& g, const VertexSet& s1, const VertexSet& s2);

/// (vs, es) is a tree inside g. Edges outside g or with endpoints outside
/// vs make it not a tree.
bool is_tree(const Graph& g, const VertexSet& vs, const std::vector<Edge>& es);

/// Is g[s] connected? The empty set counts as not connected.
bool is_connected_subset(const Graph& g, const VertexSet& s);

VertexSet sorted_unique(VertexSet s);

}  // namespace minorforge
