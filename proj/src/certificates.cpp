#include "minorforge/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

namespace minorforge {

namespace {

using Mask = std::uint64_t;

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Owner of each vertex among the given parts (-1 = none). Reports overlaps
// and unknown vertices.
std::vector<int> owners(const Graph& g, const std::vector<VertexSet>& parts, const char* noun,
                        ValidationReport& report) {
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty())
      report.add(std::string(noun) + " " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      if (!g.contains(v)) {
        report.add(std::string(noun) + " " + std::to_string(i) + " contains unknown vertex " +
                   std::to_string(v));
        continue;
      }
      if (owner[v] == static_cast<int>(i))
        report.add(std::string(noun) + " " + std::to_string(i) + " lists vertex " +
                   std::to_string(v) + " twice");
      else if (owner[v] != -1)
        report.add("vertex " + std::to_string(v) + " is shared by " + noun + "s " +
                   std::to_string(owner[v]) + " and " + std::to_string(i));
      else
        owner[v] = static_cast<int>(i);
    }
  }
  return owner;
}

// One link per unordered pair, each an edge of g between the right parts.
// `mono` (if non-null) additionally requires equal colors at both ends.
void check_links(const Graph& g, const std::vector<Link>& links, int k,
                 const std::vector<int>& owner, const char* noun,
                 const std::map<Vertex, int>* mono, ValidationReport& report) {
  std::set<std::pair<int, int>> seen;
  for (const auto& l : links) {
    const auto where = std::string(noun) + " " + pair_str(l.i, l.j);
    if (l.i < 0 || l.j < 0 || l.i >= k || l.j >= k || l.i >= l.j) {
      report.add(where + " has invalid indices");
      continue;
    }
    if (!seen.insert({l.i, l.j}).second) {
      report.add(where + " is given more than once");
      continue;
    }
    if (!g.adjacent(l.u, l.v)) {
      report.add(where + ": " + std::to_string(l.u) + "-" + std::to_string(l.v) +
                 " is not an edge of the graph");
      continue;
    }
    if (owner[l.u] != l.i || owner[l.v] != l.j) {
      report.add(where + ": endpoints do not lie in the linked parts");
      continue;
    }
    if (mono) {
      auto cu = mono->find(l.u);
      auto cv = mono->find(l.v);
      if (cu != mono->end() && cv != mono->end() && cu->second != cv->second)
        report.add(where + ": " + std::to_string(l.u) + "-" + std::to_string(l.v) +
                   " is not monochromatic");
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!seen.count({i, j}))
        report.add(std::string(noun) + " " + pair_str(i, j) + " is missing");
}

// ---------------------------------------------------------------------------
// Exhaustive clique-model search over bitmasks. `inner` decides which edges
// may hold a branch set together, `outer` which edges may link two sets.

class CliqueModelSearch {
public:
  CliqueModelSearch(int n, const std::vector<Mask>& inner, const std::vector<Mask>& outer)
      : n_(n), outer_(outer) {
    const Mask full = Mask{1} << n;
    connected_.clear();
    for (Mask s = 1; s < full; ++s)
      if (connected(s, inner))
        connected_.push_back(s);
    // Sets in order of their smallest vertex, so chosen sets can be kept
    // sorted by minimum.
    std::stable_sort(connected_.begin(), connected_.end(), [](Mask a, Mask b) {
      return std::countr_zero(a) < std::countr_zero(b);
    });
  }

  bool exists(int k) {
    if (k <= 0)
      return true;
    chosen_.clear();
    return extend(k, 0, 0);
  }

private:
  static bool connected(Mask s, const std::vector<Mask>& adj) {
    Mask reach = s & (~s + 1);
    while (true) {
      Mask next = reach;
      for (Mask r = reach; r; r &= r - 1)
        next |= adj[std::countr_zero(r)] & s;
      if (next == reach)
        return reach == s;
      reach = next;
    }
  }

  Mask boundary(Mask s) const {
    Mask out = 0;
    for (Mask r = s; r; r &= r - 1)
      out |= outer_[std::countr_zero(r)];
    return out;
  }

  bool extend(int k, std::size_t from, Mask used) {
    if (static_cast<int>(chosen_.size()) == k)
      return true;
    const int need = k - static_cast<int>(chosen_.size());
    if (std::popcount(used) + need > n_)
      return false;
    for (std::size_t idx = from; idx < connected_.size(); ++idx) {
      Mask s = connected_[idx];
      if (s & used)
        continue;
      Mask b = boundary(s);
      bool linked = std::all_of(chosen_.begin(), chosen_.end(), [&](Mask t) { return (b & t) != 0; });
      if (!linked)
        continue;
      chosen_.push_back(s);
      if (extend(k, idx + 1, used | s))
        return true;
      chosen_.pop_back();
    }
    return false;
  }

  int n_;
  std::vector<Mask> outer_;
  std::vector<Mask> connected_;
  std::vector<Mask> chosen_;
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

// Largest k with k <= n and k(k-1)/2 <= |E|.
int clique_minor_upper_bound(const Graph& g) {
  int k = std::min(g.order(), 1);
  while (k + 1 <= g.order() && static_cast<std::size_t>(k + 1) * k / 2 <= g.edge_count())
    ++k;
  return k;
}

}  // namespace

ValidationReport verify_odd_expansion(const Graph& g, const OddExpansion& x) {
  ValidationReport report;
  std::vector<VertexSet> sets;
  for (const auto& t : x.trees)
    sets.push_back(t.vertices);
  auto owner = owners(g, sets, "tree", report);

  for (std::size_t i = 0; i < x.trees.size(); ++i) {
    const auto& t = x.trees[i];
    const auto name = "tree " + std::to_string(i);
    if (!t.vertices.empty() && !is_tree(g, t.vertices, t.edges))
      report.add(name + " is not a tree of the graph");
    for (Vertex v : t.vertices) {
      auto it = x.colors.find(v);
      if (it == x.colors.end())
        report.add(name + ": vertex " + std::to_string(v) + " has no color");
      else if (it->second != 1 && it->second != 2)
        report.add(name + ": vertex " + std::to_string(v) + " has color outside {1,2}");
    }
    for (auto [u, v] : t.edges) {
      auto cu = x.colors.find(u);
      auto cv = x.colors.find(v);
      if (cu != x.colors.end() && cv != x.colors.end() && cu->second == cv->second)
        report.add(name + ": tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                   " is monochromatic");
    }
  }
  for (auto [v, col] : x.colors)
    if (!g.contains(v) || owner[v] == -1)
      report.add("color given for vertex " + std::to_string(v) + " outside every tree");

  check_links(g, x.connectors, x.order(), owner, "connector", &x.colors, report);
  return report;
}

ValidationReport verify_minor_model(const Graph& g, const MinorModel& m) {
  ValidationReport report;
  auto owner = owners(g, m.branch_sets, "branch set", report);
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    const auto& s = m.branch_sets[i];
    bool known = std::all_of(s.begin(), s.end(), [&](Vertex v) { return g.contains(v); });
    if (!s.empty() && known && !is_connected_subset(g, s))
      report.add("branch set " + std::to_string(i) + " is not connected");
  }
  check_links(g, m.links, m.order(), owner, "link", nullptr, report);
  return report;
}

MinorModel expansion_to_minor_model(const Graph& g, const OddExpansion& x) {
  auto report = verify_odd_expansion(g, x);
  if (!report.ok())
    throw InputError("expansion_to_minor_model: invalid expansion: " + report.violations.front());
  MinorModel m;
  for (const auto& t : x.trees)
    m.branch_sets.push_back(sorted_unique(t.vertices));
  m.links = x.connectors;
  return m;
}

int clique_minor_number(const Graph& g, const Limits& limits) {
  check_limit("clique_minor_number", g.order(), std::min(limits.minor, 30));
  auto adj = adjacency_masks(g);
  CliqueModelSearch search(g.order(), adj, adj);
  for (int k = clique_minor_upper_bound(g); k > 0; --k)
    if (search.exists(k))
      return k;
  return 0;
}

int odd_clique_minor_number(const Graph& g, const Limits& limits) {
  check_limit("odd_clique_minor_number", g.order(), std::min(limits.odd_minor, 30));
  const int n = g.order();
  if (n == 0)
    return 0;
  auto adj = adjacency_masks(g);
  // Each 2-coloring f splits the edges: bichromatic edges may form trees,
  // monochromatic edges may connect trees. f and its complement behave
  // identically, so vertex 0 is fixed to color 1.
  std::vector<CliqueModelSearch> searches;
  for (Mask f = 0; f < (Mask{1} << (n - 1)); ++f) {
    Mask ones = f << 1;  // vertices with color 2
    std::vector<Mask> bichromatic(n), monochromatic(n);
    for (int v = 0; v < n; ++v) {
      Mask same = (ones >> v) & 1 ? ones : ~ones;
      monochromatic[v] = adj[v] & same;
      bichromatic[v] = adj[v] & ~same;
    }
    searches.emplace_back(n, bichromatic, monochromatic);
  }
  for (int k = clique_minor_upper_bound(g); k > 1; --k)
    for (auto& s : searches)
      if (s.exists(k))
        return k;
  return 1;
}

}  // namespace minorforge
