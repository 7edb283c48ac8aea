#include "minorforge/constructions.hpp"

#include "minorforge/families.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace minorforge {

namespace {

Bitset membership(int order, const VertexSet& s) {
  Bitset in(order);
  for (Vertex v : s) {
    if (v < 0 || v >= order)
      throw InputError("vertex " + std::to_string(v) + " not in graph");
    in.set(v);
  }
  return in;
}

// f is proper on the spanning tree of part `idx` iff it is constant on each
// side and differs between the sides.
bool properly_colors_part(const PartitionCertificate& p, int idx, const TreeColoring& f) {
  const auto& sides = p.sides[idx];
  if (sides.side_a.empty())
    return false;
  const int a = f[sides.side_a.front()];
  if (a != 1 && a != 2)
    return false;
  auto all_equal = [&](const VertexSet& s, int col) {
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return f[v] == col; });
  };
  return all_equal(sides.side_a, a) && all_equal(sides.side_b, 3 - a);
}

void fail_verification(const char* what, const ValidationReport& report) {
  throw InternalError(std::string(what) + " produced an invalid certificate: " +
                      report.violations.front());
}

// Accumulates trees with their colors and then pairwise connectors.
struct ExpansionBuilder {
  OddExpansion x;

  void add_tree(VertexSet vs, std::vector<Edge> es) {
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    x.trees.push_back({std::move(vs), std::move(es)});
  }

  void color(Vertex v, int c) { x.colors[v] = c; }

  void connect(int i, int j, Vertex u, Vertex v) { x.connectors.push_back({i, j, u, v}); }
};

}  // namespace

Edge find_monochromatic_edge(const Graph& g, const PartitionCertificate& p, const TreeColoring& f,
                             const VertexSet& ti, const VertexSet& tj) {
  const int n = g.order();
  auto eta = p.part_index(n);
  if (eta.empty() || p.sides.size() != p.parts.size())
    throw InputError("find_monochromatic_edge: partition does not cover the graph");
  if (static_cast<int>(f.size()) != n)
    throw InputError("find_monochromatic_edge: tree coloring has the wrong size");
  Bitset in_i = membership(n, ti);
  Bitset in_j = membership(n, tj);
  if (in_i.intersects(in_j))
    throw InputError("find_monochromatic_edge: vertex sets overlap");

  bool joined = false;
  for (Vertex a : sorted_unique(ti)) {
    Bitset across = g.neighbors(a) & in_j;
    for (auto bw = across.find_first(); bw != Bitset::npos; bw = across.find_next(bw)) {
      const Vertex b = static_cast<Vertex>(bw);
      joined = true;
      if (eta[a] == eta[b])
        continue;
      const bool a_first = eta[a] < eta[b];
      const Vertex later = a_first ? b : a;
      const int part = a_first ? eta[a] : eta[b];
      const Bitset& home = a_first ? in_i : in_j;
      // The whole earlier part must sit inside the earlier endpoint's side.
      bool whole = std::all_of(p.parts[part].begin(), p.parts[part].end(),
                               [&](Vertex v) { return home.test(v); });
      if (!whole || !properly_colors_part(p, part, f) || (f[later] != 1 && f[later] != 2))
        continue;
      for (Vertex w : p.parts[part])
        if (g.adjacent(w, later) && f[w] == f[later])
          return a_first ? Edge{w, later} : Edge{later, w};
    }
  }
  if (!joined)
    throw InputError("find_monochromatic_edge: no edge joins the two vertex sets");
  throw InputError("find_monochromatic_edge: no joining edge satisfies the partition property");
}

OddExpansion extract_odd_expansion(const Graph& g, const PartitionCertificate& p,
                                   const ZigzagWitness& w) {
  const Coloring c = partition_coloring(g, p);
  if (w.coloring != c)
    throw InputError("extract_odd_expansion: zigzag was not taken in the partition coloring");
  if (!is_zigzag(g, c, w.sequence))
    throw InputError("extract_odd_expansion: sequence is not a zigzag");
  if (w.length() < 2)
    throw InputError("extract_odd_expansion: zigzag must have length at least 2");

  const int k = w.length() / 2 + 1;
  const VertexSet z(w.sequence.begin(), w.sequence.begin() + (2 * k - 2));
  const auto eta = p.part_index(g.order());

  // Part side coloring: A -> 1, B -> 2. Proper on every part's spanning tree.
  TreeColoring base(g.order(), 0);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.sides[i].side_a)
      base[v] = 1;
    for (Vertex v : p.sides[i].side_b)
      base[v] = 2;
  }

  // M: consecutive zigzag vertices in the same part, oriented (Z1, Z2) where
  // Z1 holds the odd positions z_1, z_3, ....
  std::vector<std::pair<Vertex, Vertex>> matched;
  std::vector<bool> in_m(z.size(), false);
  for (std::size_t pos = 0; pos + 1 < z.size(); ++pos) {
    if (eta[z[pos]] != eta[z[pos + 1]])
      continue;
    const bool first_is_odd = pos % 2 == 0;
    matched.emplace_back(first_is_odd ? z[pos] : z[pos + 1], first_is_odd ? z[pos + 1] : z[pos]);
    in_m[pos] = in_m[pos + 1] = true;
  }

  ExpansionBuilder out;
  TreeColoring f(g.order(), 0);
  auto add_part = [&](VertexSet& vs, std::vector<Edge>& es, int part, bool flip) {
    const auto& verts = p.parts[part];
    vs.insert(vs.end(), verts.begin(), verts.end());
    auto tree = bfs_spanning_tree(g, verts);
    es.insert(es.end(), tree.begin(), tree.end());
    for (Vertex v : verts)
      f[v] = flip ? 3 - base[v] : base[v];
  };
  auto whole_part_tree = [&](int part) {
    VertexSet vs;
    std::vector<Edge> es;
    add_part(vs, es, part, false);
    out.add_tree(std::move(vs), std::move(es));
  };

  const int r = static_cast<int>(matched.size());
  if (r <= k - 2) {
    // Extend M to a perfect matching of the complete bipartite graph on
    // (Z1, Z2) by pairing the unmatched vertices in increasing id order.
    VertexSet free_x, free_y;
    for (std::size_t pos = 0; pos < z.size(); ++pos)
      if (!in_m[pos])
        (pos % 2 == 0 ? free_x : free_y).push_back(z[pos]);
    std::sort(free_x.begin(), free_x.end());
    std::sort(free_y.begin(), free_y.end());
    auto full = matched;
    for (std::size_t i = 0; i < free_x.size(); ++i)
      full.emplace_back(free_x[i], free_y[i]);

    for (int j = 0; j < r; ++j)
      whole_part_tree(eta[full[j].first]);
    for (int j = r; j <= k - 3; ++j) {
      auto [x, y] = full[j];
      VertexSet vs;
      std::vector<Edge> es;
      add_part(vs, es, eta[x], false);
      add_part(vs, es, eta[y], base[x] == base[y]);
      es.push_back(make_edge(x, y));
      out.add_tree(std::move(vs), std::move(es));
    }
    whole_part_tree(eta[full[k - 2].first]);
    whole_part_tree(eta[full[k - 2].second]);

    for (const auto& t : out.x.trees)
      for (Vertex v : t.vertices)
        out.color(v, f[v]);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        auto [a, b] = find_monochromatic_edge(g, p, f, out.x.trees[i].vertices,
                                              out.x.trees[j].vertices);
        out.connect(i, j, a, b);
      }
  } else {
    // |M| = k - 1: the zigzag pairs up as (z1 z2), (z3 z4), ... in increasing
    // part order. Keep the first k - 2 part trees and split the last pair
    // into two single-vertex trees colored 1.
    for (int j = 0; j < k - 2; ++j)
      whole_part_tree(eta[matched[j].first]);
    const auto [x_last, y_last] = matched[k - 2];
    out.add_tree({x_last}, {});
    out.add_tree({y_last}, {});
    f[x_last] = 1;
    f[y_last] = 1;

    for (const auto& t : out.x.trees)
      for (Vertex v : t.vertices)
        out.color(v, f[v]);
    for (int i = 0; i < k - 2; ++i)
      for (int j = i + 1; j < k; ++j) {
        auto [a, b] = find_monochromatic_edge(g, p, f, out.x.trees[i].vertices,
                                              out.x.trees[j].vertices);
        out.connect(i, j, a, b);
      }
    out.connect(k - 2, k - 1, x_last, y_last);
  }

  auto report = verify_odd_expansion(g, out.x);
  if (!report.ok())
    fail_verification("extract_odd_expansion", report);
  return std::move(out.x);
}

OddHadwigerResult odd_hadwiger_witness(const Graph& g) {
  OddHadwigerResult res;
  res.partition = bipartite_connected_partition(g);
  res.zigzag = longest_zigzag(g, partition_coloring(g, res.partition));
  res.zigzag_length = res.zigzag.length();
  if (res.zigzag_length >= 2) {
    res.expansion = extract_odd_expansion(g, res.partition, res.zigzag);
  } else if (g.order() > 0) {
    const Vertex v = res.zigzag.sequence.front();
    res.expansion.trees.push_back({{v}, {}});
    res.expansion.colors[v] = 1;
  }
  auto report = verify_odd_expansion(g, res.expansion);
  if (!report.ok())
    fail_verification("odd_hadwiger_witness", report);
  return res;
}

KneserMinorResult extract_minor_from_kneser_rep(const Hypergraph& h, const Limits& limits) {
  KneserMinorResult res;
  res.defect = cd(h, limits);
  res.t = res.defect.cd;
  res.kneser = kneser_graph(h);
  if (res.t == 0)
    return res;

  const auto& edges = h.hyperedges();
  std::map<Label, Vertex> id;
  for (std::size_t i = 0; i < edges.size(); ++i)
    id[edges[i]] = static_cast<Vertex>(i);

  const Label& u_set = res.defect.witness.u;
  const Label* cls[2] = {&res.defect.witness.coloring.x1, &res.defect.witness.coloring.x2};

  // Smallest hyperedge e with u in e and e inside X_i + u. Minimality of U
  // guarantees one exists.
  auto pick = [&](int u, int side) -> Vertex {
    const Label& x = *cls[side];
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!std::binary_search(e.begin(), e.end(), u))
        continue;
      bool inside = std::all_of(e.begin(), e.end(), [&](int y) {
        return y == u || std::binary_search(x.begin(), x.end(), y);
      });
      if (inside)
        return static_cast<Vertex>(i);
    }
    throw InternalError("no hyperedge inside X_" + std::to_string(side + 1) + " + {" +
                        std::to_string(u) + "}; deletion set is not minimal");
  };

  Label singles, rest;
  for (int u : u_set)
    (id.count(Label{u}) ? singles : rest).push_back(u);

  auto& sets = res.model.branch_sets;
  for (int u : singles)
    sets.push_back({id.at(Label{u})});
  const std::size_t s = rest.size();
  if (s == 1) {
    sets.push_back({pick(rest[0], 0)});
  } else if (s == 2) {
    sets.push_back({pick(rest[0], 0)});
    sets.push_back({pick(rest[1], 1)});
  } else if (s >= 3) {
    // Contract the crown matching (x,1)(x+1,2), cyclically.
    for (std::size_t x = 0; x < s; ++x)
      sets.push_back(sorted_unique({pick(rest[x], 0), pick(rest[(x + 1) % s], 1)}));
  }

  const Graph& kg = res.kneser;
  for (int i = 0; i < res.model.order(); ++i)
    for (int j = i + 1; j < res.model.order(); ++j) {
      bool found = false;
      for (Vertex a : sets[i]) {
        for (Vertex b : sets[j])
          if (kg.adjacent(a, b)) {
            res.model.links.push_back({i, j, a, b});
            found = true;
            break;
          }
        if (found)
          break;
      }
      if (!found)
        throw InternalError("branch sets " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not adjacent in the Kneser graph");
    }

  auto report = verify_minor_model(kg, res.model);
  if (!report.ok())
    fail_verification("extract_minor_from_kneser_rep", report);
  if (res.model.order() != res.t)
    throw InternalError("extract_minor_from_kneser_rep: model order differs from cd");
  return res;
}

OddExpansion schrijver_expansion(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw InputError("schrijver_expansion requires n >= 2k >= 2");
  const Graph g = schrijver(n, k);
  std::map<Label, Vertex> id;
  for (Vertex v = 0; v < g.order(); ++v)
    id[(*g.labels())[v]] = v;
  auto vertex_of = [&](Label s) {
    std::sort(s.begin(), s.end());
    auto it = id.find(s);
    if (it == id.end())
      throw InternalError("set is not a vertex of the Schrijver graph");
    return it->second;
  };
  auto with = [](Label s, int extra) {
    s.push_back(extra);
    return s;
  };

  const int m = 2 * k - 1;
  const auto family = cyclically_stable_subsets(m, k - 1);  // vertices of S(2k-1, k-1)
  Label evens, odds;  // A_0 = {2,4,..,2k-2}, A_1 = {1,3,..,2k-3}
  for (int e = 2; e <= 2 * k - 2; e += 2)
    evens.push_back(e);
  for (int o = 1; o <= 2 * k - 3; o += 2)
    odds.push_back(o);

  auto side_color = [&](const Label& a) {
    if (a == evens)
      return 1;
    const bool has_first = std::binary_search(a.begin(), a.end(), 1);
    const bool has_last = std::binary_search(a.begin(), a.end(), m);
    if (has_first && !has_last)
      return 1;
    if (!has_first && has_last)
      return 2;
    throw InternalError("stable set other than A_0 must contain exactly one of 1 and 2k-1");
  };

  ExpansionBuilder out;
  const int paths = n - 2 * k;
  for (int i = 1; i <= paths; ++i) {
    VertexSet vs;
    for (const auto& a : family) {
      const int col = side_color(a);
      const Vertex v = vertex_of(with(a, i + col + 2 * k - 2));
      vs.push_back(v);
      // X ∩ [2k-1] recovers a.
      out.color(v, col);
    }
    std::sort(vs.begin(), vs.end());
    std::vector<Edge> es;
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (g.adjacent(vs[a], vs[b]))
          es.emplace_back(vs[a], vs[b]);
    out.add_tree(std::move(vs), std::move(es));
  }

  Label odd_set, even_set;  // {1,3,..,2k-1} and {2,4,..,2k-2,n}
  for (int o = 1; o <= 2 * k - 1; o += 2)
    odd_set.push_back(o);
  even_set = with(evens, n);
  const Vertex odd_v = vertex_of(odd_set);
  const Vertex even_v = vertex_of(even_set);
  out.add_tree({odd_v}, {});
  out.add_tree({even_v}, {});
  out.color(odd_v, 1);
  out.color(even_v, 1);

  const int odd_tree = paths;
  const int even_tree = paths + 1;
  auto a0_at = [&](int i) { return vertex_of(with(evens, i + 2 * k - 1)); };
  auto a1_at = [&](int i) { return vertex_of(with(odds, i + 2 * k - 1)); };
  for (int i = 1; i <= paths; ++i) {
    for (int j = i + 1; j <= paths; ++j)
      out.connect(i - 1, j - 1, a0_at(i), a1_at(j));
    out.connect(i - 1, odd_tree, a0_at(i), odd_v);
    out.connect(i - 1, even_tree, a1_at(i), even_v);
  }
  out.connect(odd_tree, even_tree, odd_v, even_v);

  auto report = verify_odd_expansion(g, out.x);
  if (!report.ok())
    fail_verification("schrijver_expansion", report);
  return std::move(out.x);
}

MinorModel schrijver_minor_model(int n, int k) {
  return expansion_to_minor_model(schrijver(n, k), schrijver_expansion(n, k));
}

}  // namespace minorforge
