#include "doctest.h"

#include "minorforge/bounds.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/families.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace minorforge;

namespace {

bool valid_two_coloring(const Hypergraph& h, const TwoColoring& c) {
  for (const auto& e : h.hyperedges()) {
    bool in1 = false, in2 = false;
    for (int x : e) {
      in1 = in1 || std::binary_search(c.x1.begin(), c.x1.end(), x);
      in2 = in2 || std::binary_search(c.x2.begin(), c.x2.end(), x);
    }
    if (!(in1 && in2))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(complete_graph(4)).chi == 4);
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(kneser(5, 2)).chi == 3);
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(edgeless_graph(3)).chi == 1);
  CHECK_THROWS_AS(chromatic_number(complete_graph(17)), SizeLimitError);
}

TEST_CASE("chromatic number matches brute force") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n)) {
      auto res = chromatic_number(g);
      CHECK(res.chi == oracle::chromatic_number(g));
      CHECK(is_proper(g, res.coloring));
      CHECK(res.coloring.max_color() == res.chi);
    }
}

TEST_CASE("longest zigzag examples") {
  Graph k4 = complete_graph(4);
  CHECK(longest_zigzag(k4, Coloring{{1, 2, 3, 4}}).length() == 4);
  CHECK(longest_zigzag(k4, Coloring{{4, 2, 1, 3}}).length() == 4);

  Graph k33 = complete_bipartite(3, 3);
  CHECK(longest_zigzag(k33, Coloring{{1, 1, 1, 2, 2, 2}}).length() == 2);

  Graph c5 = cycle_graph(5);
  auto w = longest_zigzag(c5, Coloring{{1, 2, 1, 2, 3}});
  CHECK(w.length() == 3);
  CHECK(is_zigzag(c5, w.coloring, w.sequence));

  CHECK_FALSE(is_zigzag(c5, Coloring{{1, 2, 1, 2, 3}}, {0, 2}));  // same color
  CHECK(is_zigzag(c5, Coloring{{1, 2, 1, 2, 3}}, {}));
}

TEST_CASE("longest zigzag matches brute force") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(uniform_int(rng, 1, 7), rng);
    // a random proper coloring: greedy over a random order, colors shuffled
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> c(g.order(), 0);
    for (int v : order) {
      const VertexSet nb = g.neighbor_list(v);
      int col = 1 + static_cast<int>(rng() % 2);
      while (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return c[u] == col; }))
        ++col;
      c[v] = col;
    }
    auto w = longest_zigzag(g, Coloring{c});
    auto expected = oracle::longest_zigzag(g, c);
    CHECK(w.length() == static_cast<int>(expected.size()));
    CHECK(is_zigzag(g, Coloring{c}, w.sequence));
    CHECK(w.sequence == expected);
    CHECK(w.length() <= Coloring{c}.max_color());
  }
}

TEST_CASE("zig examples") {
  for (int n = 1; n <= 7; ++n)
    CHECK(zig(complete_graph(n)).zig == n);
  CHECK(zig(complete_bipartite(3, 3)).zig == 2);
  CHECK(zig(path_graph(4)).zig == 2);
  CHECK(zig(cycle_graph(6)).zig == 2);
  CHECK(zig(cycle_graph(5)).zig == 3);
  CHECK(zig(edgeless_graph(3)).zig == 1);
  CHECK(zig(Graph(0)).zig == 0);
  CHECK_THROWS_AS(zig(edgeless_graph(9)), SizeLimitError);
}

TEST_CASE("zig witness is consistent") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n)) {
      auto res = zig(g);
      CHECK(is_proper(g, res.coloring));
      CHECK(longest_zigzag(g, res.coloring).length() == res.zig);
      CHECK(res.witness.length() == res.zig);
      CHECK(res.zig <= chromatic_number(g).chi);
    }
}

TEST_CASE("zig matches brute force on up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n))
      CHECK(zig(g).zig == oracle::zig(g));
}

TEST_CASE("two-colorability examples") {
  CHECK_FALSE(is_two_colorable(Hypergraph(3, {{1}, {2, 3}})));
  Hypergraph h(4, {{1, 2}, {3, 4}});
  auto c = is_two_colorable(h);
  REQUIRE(c);
  CHECK(valid_two_coloring(h, *c));
  CHECK_FALSE(is_two_colorable(Hypergraph(3, subsets_of_size(3, 2))));
}

TEST_CASE("two-colorability matches brute force") {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    Hypergraph h = random_hypergraph(7, 10, rng);
    auto c = is_two_colorable(h);
    CHECK(c.has_value() == oracle::two_colorable(h));
    if (c)
      CHECK(valid_two_coloring(h, *c));
  }
}

TEST_CASE("delete_elements") {
  Hypergraph h(4, {{1, 2}, {2, 3}, {4}});
  Hypergraph d = delete_elements(h, {2});
  CHECK(d.ground() == 4);
  CHECK(d.hyperedges() == std::vector<Label>{{4}});
}

TEST_CASE("cd examples") {
  auto zero = cd(Hypergraph(4, {{1, 2}, {3, 4}}));
  CHECK(zero.cd == 0);
  CHECK(zero.witness.u.empty());
  CHECK(cd(Hypergraph(1, {{1}})).cd == 1);
  auto k52 = cd(Hypergraph(5, subsets_of_size(5, 2)));
  CHECK(k52.cd == 3);
  CHECK(k52.witness.u == Label{1, 2, 3});
  CHECK(cd(Hypergraph(3, subsets_of_size(3, 2))).cd == 1);
  CHECK_THROWS_AS(cd(Hypergraph(13, {{13}})), SizeLimitError);
}

TEST_CASE("cd matches brute force") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Hypergraph h = random_hypergraph(8, 12, rng);
    auto res = cd(h);
    CHECK(res.cd == oracle::cd(h));
    CHECK(static_cast<int>(res.witness.u.size()) == res.cd);
    const Hypergraph rest = delete_elements(h, res.witness.u);
    CHECK(valid_two_coloring(rest, res.witness.coloring));
    for (int x : res.witness.u) {
      CHECK_FALSE(std::binary_search(res.witness.coloring.x1.begin(), res.witness.coloring.x1.end(), x));
      CHECK_FALSE(std::binary_search(res.witness.coloring.x2.begin(), res.witness.coloring.x2.end(), x));
    }
  }
}
