#include "minorforge/core.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace minorforge {

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(int order) : Graph(order, {}) {}

Graph::Graph(int order, std::vector<Edge> edges, std::optional<std::vector<Label>> labels)
    : order_(order), labels_(std::move(labels)) {
  if (order < 0)
    throw InputError("graph order must be non-negative");
  rows_.assign(order, Bitset(order));
  for (auto& e : edges) {
    if (!contains(e.first) || !contains(e.second))
      throw InputError("edge endpoint out of range: [" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "]");
    if (e.first == e.second)
      throw InputError("self-loop at vertex " + std::to_string(e.first));
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("duplicate edge");
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    rows_[u].set(v);
    rows_[v].set(u);
  }

  if (labels_) {
    if (static_cast<int>(labels_->size()) != order)
      throw InputError("labels must be given for every vertex");
    for (auto& l : *labels_) {
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end())
        throw InputError("label contains a repeated element");
    }
    std::set<Label> seen(labels_->begin(), labels_->end());
    if (seen.size() != labels_->size())
      throw InputError("vertex labels must be pairwise distinct");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return contains(u) && contains(v) && rows_[u].test(v);
}

VertexSet Graph::neighbor_list(Vertex v) const {
  VertexSet out;
  for (auto w = rows_[v].find_first(); w != Bitset::npos; w = rows_[v].find_next(w))
    out.push_back(static_cast<Vertex>(w));
  return out;
}

Hypergraph::Hypergraph(int ground, std::vector<Label> hyperedges) : ground_(ground) {
  if (ground < 0)
    throw InputError("ground set size must be non-negative");
  for (auto& e : hyperedges) {
    if (e.empty())
      throw InputError("empty hyperedge");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("hyperedge contains a repeated element");
    if (e.front() < 1 || e.back() > ground)
      throw InputError("hyperedge element outside 1.." + std::to_string(ground));
  }
  std::sort(hyperedges.begin(), hyperedges.end());
  if (std::adjacent_find(hyperedges.begin(), hyperedges.end()) != hyperedges.end())
    throw InputError("duplicate hyperedge");
  hyperedges_ = std::move(hyperedges);
}

int Coloring::max_color() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order())
    throw InputError("coloring is not defined on every vertex");
  for (int col : c.colors)
    if (col < 1)
      throw InputError("colors must be positive integers");
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c(e.first) == c(e.second); });
}

VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

namespace {

Bitset membership(const Graph& g, const VertexSet& s) {
  Bitset in(g.order());
  for (Vertex v : s) {
    if (!g.contains(v))
      throw InputError("vertex " + std::to_string(v) + " not in graph");
    in.set(v);
  }
  return in;
}

// BFS side assignment of g[s] from s's smallest vertex: 0 / 1 per reached
// vertex, -1 for unreached. Sets `odd` if a same-side edge was seen.
std::vector<int> bfs_sides(const Graph& g, const VertexSet& s, const Bitset& in, bool& odd) {
  std::vector<int> side(g.order(), -1);
  odd = false;
  if (s.empty())
    return side;
  std::deque<Vertex> queue{s.front()};
  side[s.front()] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    Bitset nb = g.neighbors(u) & in;
    for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        queue.push_back(static_cast<Vertex>(w));
      } else if (side[w] == side[u]) {
        odd = true;
      }
    }
  }
  return side;
}

}  // namespace

std::optional<Bipartition> bipartition_of(const Graph& g, const VertexSet& s_in) {
  VertexSet s = sorted_unique(s_in);
  Bitset in = membership(g, s);
  bool odd = false;
  auto side = bfs_sides(g, s, in, odd);
  Bipartition out;
  for (Vertex v : s) {
    if (side[v] < 0)
      throw InputError("vertex set does not induce a connected subgraph");
    (side[v] == 0 ? out.side_a : out.side_b).push_back(v);
  }
  if (odd)
    return std::nullopt;
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex r = 0; r < g.order(); ++r) {
    if (seen[r])
      continue;
    VertexSet comp{r};
    seen[r] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbor_list(comp[i]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_complete_between(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  Bitset a = membership(g, s1);
  Bitset b = membership(g, s2);
  if (a.intersects(b))
    throw InputError("is_complete_between: sets overlap");
  for (Vertex u : s1)
    if (!b.is_subset_of(g.neighbors(u)))
      return false;
  return true;
}

bool is_connected_subset(const Graph& g, const VertexSet& s_in) {
  VertexSet s = sorted_unique(s_in);
  if (s.empty())
    return false;
  Bitset in = membership(g, s);
  bool odd = false;
  auto side = bfs_sides(g, s, in, odd);
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return side[v] >= 0; });
}

bool is_tree(const Graph& g, const VertexSet& vs_in, const std::vector<Edge>& es) {
  VertexSet vs = sorted_unique(vs_in);
  if (vs.size() != vs_in.size() || vs.empty())
    return false;
  if (es.size() + 1 != vs.size())
    return false;
  for (Vertex v : vs)
    if (!g.contains(v))
      return false;
  // Union-find over the edges; a cycle or foreign endpoint disqualifies.
  std::vector<int> parent(vs.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    parent[i] = static_cast<int>(i);
  auto index = [&](Vertex v) -> int {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    return it != vs.end() && *it == v ? static_cast<int>(it - vs.begin()) : -1;
  };
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : es) {
    if (!g.adjacent(u, v))
      return false;
    int iu = index(u), iv = index(v);
    if (iu < 0 || iv < 0)
      return false;
    int ru = find(iu), rv = find(iv);
    if (ru == rv)
      return false;
    parent[ru] = rv;
  }
  return true;
}

}  // namespace minorforge
