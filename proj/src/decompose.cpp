#include "minorforge/decompose.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace minorforge {

namespace {

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

std::vector<int> PartitionCertificate::part_index(int order) const {
  std::vector<int> eta(order, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= order || eta[v] != -1)
        return {};
      eta[v] = static_cast<int>(i);
    }
  if (std::find(eta.begin(), eta.end(), -1) != eta.end())
    return {};
  return eta;
}

PartitionCertificate bipartite_connected_partition(const Graph& g) {
  const int n = g.order();
  PartitionCertificate out;
  std::vector<bool> removed(n, false);
  // side[v]: 0 = A, 1 = B for vertices of the part being grown, -1 otherwise.
  std::vector<int> side(n, -1);

  for (Vertex root = 0; root < n; ++root) {
    if (removed[root])
      continue;
    VertexSet part{root};
    side[root] = 0;
    removed[root] = true;

    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex v = 0; v < n && !grew; ++v) {
        if (removed[v])
          continue;
        bool sees_a = false, sees_b = false;
        for (Vertex u : part) {
          if (!g.adjacent(u, v))
            continue;
          (side[u] == 0 ? sees_a : sees_b) = true;
        }
        if (sees_a == sees_b)  // no neighbor in the part, or both sides
          continue;
        side[v] = sees_a ? 1 : 0;
        removed[v] = true;
        part.push_back(v);
        grew = true;
      }
    }

    std::sort(part.begin(), part.end());
    Bipartition sides;
    for (Vertex v : part)
      (side[v] == 0 ? sides.side_a : sides.side_b).push_back(v);
    out.parts.push_back(std::move(part));
    out.sides.push_back(std::move(sides));
  }

  auto report = verify_partition(g, out);
  if (!report.ok())
    throw InternalError("bipartite_connected_partition produced an invalid partition: " +
                        report.violations.front());
  return out;
}

ValidationReport verify_partition(const Graph& g, const PartitionCertificate& p) {
  ValidationReport report;
  const int n = g.order();

  if (p.sides.size() != p.parts.size())
    report.add("sides: expected one bipartition per part");

  std::vector<int> eta(n, -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    if (part.empty())
      report.add("part " + std::to_string(i + 1) + " is empty");
    for (Vertex v : part) {
      if (v < 0 || v >= n) {
        report.add("part " + std::to_string(i + 1) + " contains unknown vertex " +
                   std::to_string(v));
        continue;
      }
      if (eta[v] != -1)
        report.add("vertex " + std::to_string(v) + " appears in more than one part");
      else
        eta[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (eta[v] == -1)
      report.add("vertex " + std::to_string(v) + " is not covered");
  if (!report.ok())
    return report;

  std::vector<int> side(n, -1);
  bool sides_usable = true;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto label = "part " + std::to_string(i + 1) + " " + set_str(p.parts[i]);
    if (!is_connected_subset(g, p.parts[i])) {
      report.add(label + " is not connected");
      sides_usable = false;
      continue;
    }
    auto bip = bipartition_of(g, p.parts[i]);
    if (!bip) {
      report.add(label + " is not bipartite");
      sides_usable = false;
      continue;
    }
    if (i < p.sides.size()) {
      Bipartition recorded{sorted_unique(p.sides[i].side_a), sorted_unique(p.sides[i].side_b)};
      if (recorded != *bip)
        report.add(label + " has incorrectly recorded sides");
    }
    for (Vertex v : bip->side_a)
      side[v] = 0;
    for (Vertex v : bip->side_b)
      side[v] = 1;
  }
  if (!sides_usable)
    return report;

  // Later vertices see an earlier part on neither side or on both sides.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> seen(p.parts.size(), 0);  // bit 0: side A, bit 1: side B
    for (Vertex u : g.neighbor_list(v))
      if (eta[u] < eta[v])
        seen[eta[u]] |= 1 << side[u];
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i] == 1 || seen[i] == 2)
        report.add("vertex " + std::to_string(v) + " in part " + std::to_string(eta[v] + 1) +
                   " sees only one side of part " + std::to_string(i + 1));
  }
  return report;
}

Coloring partition_coloring(const Graph& g, const PartitionCertificate& p) {
  auto report = verify_partition(g, p);
  if (!report.ok())
    throw InputError("partition_coloring: invalid partition: " + report.violations.front());
  Coloring c{std::vector<int>(g.order(), 0)};
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    for (Vertex v : p.sides[i].side_a)
      c.colors[v] = 2 * idx - 1;
    for (Vertex v : p.sides[i].side_b)
      c.colors[v] = 2 * idx;
  }
  return c;
}

std::vector<Edge> bfs_spanning_tree(const Graph& g, const VertexSet& part_in) {
  VertexSet part = sorted_unique(part_in);
  std::vector<Edge> tree;
  if (part.empty())
    return tree;
  Bitset in(g.order());
  for (Vertex v : part)
    in.set(v);
  Bitset seen(g.order());
  std::deque<Vertex> queue{part.front()};
  seen.set(part.front());
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    Bitset next = g.neighbors(u) & in & ~seen;
    for (auto w = next.find_first(); w != Bitset::npos; w = next.find_next(w)) {
      seen.set(w);
      tree.push_back(make_edge(u, static_cast<Vertex>(w)));
      queue.push_back(static_cast<Vertex>(w));
    }
  }
  if (tree.size() + 1 != part.size())
    throw InputError("bfs_spanning_tree: part is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace minorforge
