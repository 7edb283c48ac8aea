#include "minorforge/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace minorforge {

namespace {

using Code = std::uint64_t;

// Upper-triangle adjacency bits in row-major order under `order`
// (order[i] = old vertex placed at new position i).
Code code_of(const Graph& g, const std::vector<Vertex>& order) {
  Code code = 0;
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      code <<= 1;
      if (g.adjacent(order[i], order[j]))
        code |= 1;
    }
  return code;
}

Graph graph_of(int n, Code code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, --bit)
      if ((code >> bit) & 1)
        edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Code canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Blocks of equal degree; permute within each block.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i]))
      ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  // Odometer over the per-block permutations.
  while (true) {
    best = std::min(best, code_of(g, order));
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi))
        break;
      // wrapped back to sorted; carry into the next block
    }
    if (b == blocks.size())
      break;
  }
  return best;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > 10)
    throw SizeLimitError("canonical_form supports at most 10 vertices");
  return graph_of(g.order(), canonical_code(g));
}

std::vector<Graph> graphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 8)
    throw SizeLimitError("graphs_up_to_isomorphism supports 0..8 vertices");
  if (n == 0)
    return {Graph(0)};
  // Every class on n vertices arises from a class on n-1 vertices plus a new
  // vertex with some neighborhood.
  std::set<Code> codes;
  for (const auto& base : graphs_up_to_isomorphism(n - 1)) {
    for (Code nb = 0; nb < (Code{1} << (n - 1)); ++nb) {
      std::vector<Edge> edges = base.edges();
      for (int v = 0; v < n - 1; ++v)
        if ((nb >> v) & 1)
          edges.emplace_back(v, n - 1);
      codes.insert(canonical_code(Graph(n, std::move(edges))));
    }
  }
  std::vector<Graph> out;
  for (Code c : codes)
    out.push_back(graph_of(n, c));
  return out;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8)
    throw SizeLimitError("for_each_labeled_graph supports 0..8 vertices");
  const int pairs = n * (n - 1) / 2;
  for (Code code = 0; code < (Code{1} << pairs); ++code)
    visit(graph_of(n, code));
}

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

Graph random_graph(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() & 1)
        edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Hypergraph random_hypergraph(int max_ground, int max_edges, Rng& rng) {
  const int m = uniform_int(rng, 1, max_ground);
  const int target = uniform_int(rng, 1, max_edges);
  const std::uint64_t subsets = (std::uint64_t{1} << m) - 1;  // non-empty subsets
  std::set<Label> edges;
  // Stop once every non-empty subset is taken.
  while (static_cast<int>(edges.size()) < target && edges.size() < subsets) {
    const std::uint64_t mask = 1 + rng() % subsets;
    Label e;
    for (int x = 0; x < m; ++x)
      if ((mask >> x) & 1)
        e.push_back(x + 1);
    edges.insert(std::move(e));
  }
  return Hypergraph(m, std::vector<Label>(edges.begin(), edges.end()));
}

}  // namespace minorforge
