#include "minorforge/families.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace minorforge {

namespace {

void check_subset_params(int n, int k) {
  if (k < 1)
    throw InputError("k must be at least 1");
  if (k > n)
    throw InputError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

bool disjoint(const Label& a, const Label& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j)
      return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

// Vertices = labels (already in lexicographic order), adjacency = disjointness.
Graph disjointness_graph(std::vector<Label> labels) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (disjoint(labels[a], labels[b]))
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  int order = static_cast<int>(labels.size());
  return Graph(order, std::move(edges), std::move(labels));
}

}  // namespace

std::vector<Label> subsets_of_size(int m, int r) {
  std::vector<Label> out;
  if (r < 0 || r > m)
    return out;
  Label cur(r);
  for (int i = 0; i < r; ++i)
    cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == m - r + i + 1)
      --i;
    if (i < 0)
      break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Label> cyclically_stable_subsets(int m, int r) {
  std::vector<Label> out;
  for (auto& s : subsets_of_size(m, r)) {
    bool stable = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i + 1] == s[i] + 1)
        stable = false;
    // m and 1 are cyclically consecutive (m >= 2 so they are distinct).
    if (s.size() >= 2 && s.front() == 1 && s.back() == m)
      stable = false;
    if (stable)
      out.push_back(std::move(s));
  }
  return out;
}

Graph kneser(int n, int k) {
  check_subset_params(n, k);
  return disjointness_graph(subsets_of_size(n, k));
}

Graph schrijver(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw InputError("schrijver(n, k) requires n >= 2k >= 2");
  return disjointness_graph(cyclically_stable_subsets(n, k));
}

Graph kneser_graph(const Hypergraph& h) { return disjointness_graph(h.hyperedges()); }

Hypergraph kneser_representation(const Graph& g) {
  const int n = g.order();
  std::vector<Label> sets(n);
  for (Vertex v = 0; v < n; ++v)
    sets[v].push_back(v + 1);
  int next = n + 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) {
        sets[u].push_back(next);
        sets[v].push_back(next);
        ++next;
      }
  Hypergraph h(next - 1, sets);

  // Each set starts with its own vertex element and everything else is > n,
  // so lexicographic order keeps vertex order. Check the round trip anyway.
  Graph back = kneser_graph(h);
  if (back.order() != n || back.edges() != g.edges())
    throw InternalError("kneser_representation does not reproduce the graph");
  return h;
}

Graph crown(int n) {
  if (n < 0)
    throw InputError("crown size must be non-negative");
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y)
        edges.emplace_back(x, n + y);
  return Graph(2 * n, std::move(edges));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges())
    edges.emplace_back(u + n1, v + n1);
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = 0; b < n2; ++b)
      edges.emplace_back(a, n1 + b);
  return Graph(n1 + n2, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v)
    edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) { return join(edgeless_graph(a), edgeless_graph(b)); }

}  // namespace minorforge
