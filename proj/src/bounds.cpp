#include "minorforge/bounds.hpp"

#include "minorforge/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace minorforge {

using Mask = std::uint64_t;

namespace {

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Chromatic number: DSATUR-ordered backtracking for a fixed number of colors,
// trying k = 1, 2, ... until a coloring exists.

class KColorer {
public:
  KColorer(const std::vector<Mask>& adj, int k) : adj_(adj), k_(k), color_(adj.size(), 0) {}

  bool run() { return extend(0, 0); }
  const std::vector<int>& colors() const { return color_; }

private:
  bool extend(int colored, int used) {
    const int n = static_cast<int>(adj_.size());
    if (colored == n)
      return true;
    // Pick the uncolored vertex with the most distinct neighbor colors, then
    // the highest degree, then the smallest id.
    int best = -1, best_sat = -1, best_deg = -1;
    Mask best_forbidden = 0;
    for (int v = 0; v < n; ++v) {
      if (color_[v] != 0)
        continue;
      Mask forbidden = 0;
      for (Mask nb = adj_[v]; nb; nb &= nb - 1) {
        int w = std::countr_zero(nb);
        if (color_[w] != 0)
          forbidden |= bit(color_[w] - 1);
      }
      int sat = std::popcount(forbidden);
      int deg = std::popcount(adj_[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
        best_forbidden = forbidden;
      }
    }
    // A fresh color is interchangeable with any other unused one.
    const int top = std::min(k_, used + 1);
    for (int col = 1; col <= top; ++col) {
      if (best_forbidden & bit(col - 1))
        continue;
      color_[best] = col;
      if (extend(colored + 1, std::max(used, col)))
        return true;
    }
    color_[best] = 0;
    return false;
  }

  const std::vector<Mask>& adj_;
  int k_;
  std::vector<int> color_;
};

// ---------------------------------------------------------------------------
// Longest zigzag: depth-first extension in increasing color order. Children
// are visited in vertex-id order, so the first sequence of a given length
// found is the lexicographically smallest one of that length.

class ZigzagSearch {
public:
  ZigzagSearch(const Graph& g, const Coloring& c) : g_(g), c_(c) {
    distinct_ = c.colors;
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
  }

  VertexSet run() {
    Bitset all(g_.order());
    all.set();
    extend(0, all, all);
    return best_;
  }

private:
  int colors_above(int color) const {
    return static_cast<int>(distinct_.end() -
                            std::upper_bound(distinct_.begin(), distinct_.end(), color));
  }

  // odd_common: vertices adjacent to every chosen odd-position vertex;
  // even_common likewise for even positions.
  void extend(int last_color, const Bitset& odd_common, const Bitset& even_common) {
    const int len = static_cast<int>(seq_.size());
    if (len > static_cast<int>(best_.size()))
      best_ = seq_;
    if (len + colors_above(last_color) <= static_cast<int>(best_.size()))
      return;
    const bool next_is_odd = (len + 1) % 2 == 1;
    const Bitset& allowed = next_is_odd ? even_common : odd_common;
    for (auto w = allowed.find_first(); w != Bitset::npos; w = allowed.find_next(w)) {
      Vertex v = static_cast<Vertex>(w);
      if (c_(v) <= last_color)
        continue;
      seq_.push_back(v);
      if (next_is_odd)
        extend(c_(v), odd_common & g_.neighbors(v), even_common);
      else
        extend(c_(v), odd_common, even_common & g_.neighbors(v));
      seq_.pop_back();
      if (len + colors_above(last_color) <= static_cast<int>(best_.size()))
        return;
    }
  }

  const Graph& g_;
  const Coloring& c_;
  std::vector<int> distinct_;
  VertexSet seq_;
  VertexSet best_;
};

// ---------------------------------------------------------------------------
// zig: enumerate ordered partitions of V into independent color classes,
// one class per color 1, 2, .... A zigzag of the partial coloring survives
// any completion, so a branch dies as soon as its longest zigzag reaches the
// best complete value seen so far.

struct ZigzagState {
  int length;
  Mask odd_common;
  Mask even_common;
  friend bool operator==(const ZigzagState&, const ZigzagState&) = default;
  friend auto operator<=>(const ZigzagState&, const ZigzagState&) = default;
};

class ZigSearch {
public:
  ZigSearch(const Graph& g, int initial_best, Coloring initial)
      : n_(g.order()), adj_(adjacency_masks(g)), best_(initial_best),
        best_coloring_(std::move(initial)), color_(g.order(), 0) {}

  void run() {
    Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    std::vector<ZigzagState> states{{0, all, all}};
    extend(all, 1, states, 0);
  }

  int best() const { return best_; }
  const Coloring& best_coloring() const { return best_coloring_; }

private:
  bool independent(Mask s) const {
    for (Mask r = s; r; r &= r - 1)
      if (adj_[std::countr_zero(r)] & s)
        return false;
    return true;
  }

  void extend(Mask remaining, int color, const std::vector<ZigzagState>& states, int longest) {
    if (remaining == 0) {
      if (longest < best_) {
        best_ = longest;
        best_coloring_.colors = color_;
      }
      return;
    }
    // Enumerate non-empty independent subsets of `remaining` as class `color`.
    for (Mask cls = remaining; cls; cls = (cls - 1) & remaining) {
      if (!independent(cls))
        continue;
      std::vector<ZigzagState> next = states;
      int next_longest = longest;
      for (const auto& s : states) {
        const bool odd = (s.length + 1) % 2 == 1;
        Mask candidates = cls & (odd ? s.even_common : s.odd_common);
        for (; candidates; candidates &= candidates - 1) {
          int v = std::countr_zero(candidates);
          ZigzagState t = odd ? ZigzagState{s.length + 1, s.odd_common & adj_[v], s.even_common}
                              : ZigzagState{s.length + 1, s.odd_common, s.even_common & adj_[v]};
          next.push_back(t);
          next_longest = std::max(next_longest, t.length);
        }
      }
      if (next_longest >= best_)
        continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      for (Mask r = cls; r; r &= r - 1)
        color_[std::countr_zero(r)] = color;
      extend(remaining & ~cls, color + 1, next, next_longest);
      for (Mask r = cls; r; r &= r - 1)
        color_[std::countr_zero(r)] = 0;
    }
  }

  int n_;
  std::vector<Mask> adj_;
  int best_;
  Coloring best_coloring_;
  std::vector<int> color_;
};

// ---------------------------------------------------------------------------
// Hypergraph 2-coloring: backtracking over elements 1..m with unit
// propagation. A hyperedge whose decided elements share one color and which
// has a single undecided element forces that element to the other color.

class TwoColorer {
public:
  explicit TwoColorer(const Hypergraph& h) : h_(h), incident_(h.ground() + 1) {
    for (std::size_t e = 0; e < h.size(); ++e)
      for (int x : h.hyperedges()[e])
        incident_[x].push_back(e);
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> color(h_.ground() + 1, 0);
    for (std::size_t e = 0; e < h_.size(); ++e)
      if (h_.hyperedges()[e].size() == 1)
        return std::nullopt;
    if (solve(color, 1))
      return color;
    return std::nullopt;
  }

private:
  // Returns false on conflict. Propagates from `x` just assigned.
  bool propagate(std::vector<int>& color, int x) const {
    std::vector<int> queue{x};
    while (!queue.empty()) {
      int y = queue.back();
      queue.pop_back();
      for (std::size_t e : incident_[y]) {
        int seen = 0, free_count = 0, free_elem = 0;
        bool mixed = false;
        for (int z : h_.hyperedges()[e]) {
          if (color[z] == 0) {
            ++free_count;
            free_elem = z;
          } else if (seen == 0) {
            seen = color[z];
          } else if (color[z] != seen) {
            mixed = true;
          }
        }
        if (mixed)
          continue;
        if (free_count == 0)
          return false;
        if (free_count == 1) {
          color[free_elem] = 3 - seen;
          queue.push_back(free_elem);
        }
      }
    }
    return true;
  }

  bool solve(std::vector<int>& color, int from) const {
    int x = from;
    while (x <= h_.ground() && color[x] != 0)
      ++x;
    if (x > h_.ground())
      return true;
    for (int col : {1, 2}) {
      std::vector<int> trial = color;
      trial[x] = col;
      if (propagate(trial, x) && solve(trial, x + 1)) {
        color = std::move(trial);
        return true;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::vector<std::size_t>> incident_;
};

}  // namespace

VertexSet ZigzagWitness::odd_positions() const {
  VertexSet out;
  for (std::size_t i = 0; i < sequence.size(); i += 2)
    out.push_back(sequence[i]);
  return sorted_unique(out);
}

VertexSet ZigzagWitness::even_positions() const {
  VertexSet out;
  for (std::size_t i = 1; i < sequence.size(); i += 2)
    out.push_back(sequence[i]);
  return sorted_unique(out);
}

bool is_zigzag(const Graph& g, const Coloring& c, const VertexSet& seq) {
  if (static_cast<int>(c.size()) != g.order())
    return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.contains(seq[i]))
      return false;
    if (i > 0 && c(seq[i - 1]) >= c(seq[i]))
      return false;
  }
  for (std::size_t i = 0; i < seq.size(); i += 2)
    for (std::size_t j = 1; j < seq.size(); j += 2)
      if (!g.adjacent(seq[i], seq[j]))
        return false;
  return true;
}

ChromaticResult chromatic_number(const Graph& g, const Limits& limits) {
  check_limit("chromatic_number", g.order(), limits.chromatic);
  if (g.order() == 0)
    return {0, {}};
  auto adj = adjacency_masks(g);
  for (int k = 1;; ++k) {
    KColorer colorer(adj, k);
    if (colorer.run())
      return {k, Coloring{colorer.colors()}};
  }
}

ZigzagWitness longest_zigzag(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c))
    throw InputError("longest_zigzag requires a proper coloring");
  ZigzagSearch search(g, c);
  return {search.run(), c};
}

ZigResult zig(const Graph& g, const Limits& limits) {
  check_limit("zig", g.order(), limits.zig);
  if (g.order() == 0)
    return {0, {}, {}};
  // Any optimal coloring bounds zig from above; search for strictly better.
  auto chi = chromatic_number(g, Limits{.chromatic = std::max(limits.chromatic, g.order())});
  int start = longest_zigzag(g, chi.coloring).length();
  ZigSearch search(g, start, chi.coloring);
  search.run();
  ZigResult out;
  out.zig = search.best();
  out.coloring = search.best_coloring();
  out.witness = longest_zigzag(g, out.coloring);
  return out;
}

std::optional<TwoColoring> is_two_colorable(const Hypergraph& h) {
  auto color = TwoColorer(h).run();
  if (!color)
    return std::nullopt;
  TwoColoring out;
  for (int x = 1; x <= h.ground(); ++x)
    ((*color)[x] == 2 ? out.x2 : out.x1).push_back(x);
  return out;
}

Hypergraph delete_elements(const Hypergraph& h, const Label& u) {
  std::vector<Label> kept;
  for (const auto& e : h.hyperedges()) {
    bool meets = std::any_of(e.begin(), e.end(), [&](int x) {
      return std::find(u.begin(), u.end(), x) != u.end();
    });
    if (!meets)
      kept.push_back(e);
  }
  return Hypergraph(h.ground(), std::move(kept));
}

CdResult cd(const Hypergraph& h, const Limits& limits) {
  check_limit("cd", h.ground(), limits.cd);
  for (int size = 0; size <= h.ground(); ++size) {
    for (const auto& u : subsets_of_size(h.ground(), size)) {
      auto coloring = is_two_colorable(delete_elements(h, u));
      if (!coloring)
        continue;
      auto not_in_u = [&](int x) { return std::find(u.begin(), u.end(), x) == u.end(); };
      TwoColoring cls;
      std::copy_if(coloring->x1.begin(), coloring->x1.end(), std::back_inserter(cls.x1), not_in_u);
      std::copy_if(coloring->x2.begin(), coloring->x2.end(), std::back_inserter(cls.x2), not_in_u);
      return {size, DefectWitness{u, std::move(cls)}};
    }
  }
  throw InternalError("cd: deleting every element must leave a 2-colorable hypergraph");
}

}  // namespace minorforge
