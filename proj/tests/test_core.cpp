#include "doctest.h"

#include "minorforge/core.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/families.hpp"
#include "oracles.hpp"

using namespace minorforge;

TEST_CASE("graph construction normalizes and rejects bad input") {
  Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.neighbor_list(2) == VertexSet{0, 1});

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {}, std::vector<Label>{{1}, {1}}), InputError);
  CHECK_THROWS_AS(Graph(2, {}, std::vector<Label>{{1}}), InputError);
}

TEST_CASE("hypergraph construction") {
  Hypergraph h(3, {{3}, {2, 1}});
  CHECK(h.hyperedges() == std::vector<Label>{{1, 2}, {3}});
  CHECK_THROWS_AS(Hypergraph(3, {{}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(3, {{4}}), InputError);
  CHECK_NOTHROW(Hypergraph(1, {{1}}));
}

TEST_CASE("is_proper") {
  CHECK(is_proper(edgeless_graph(3), Coloring{{1, 1, 1}}));
  CHECK_FALSE(is_proper(complete_graph(2), Coloring{{1, 1}}));
  CHECK(is_proper(cycle_graph(5), Coloring{{1, 2, 1, 2, 3}}));
  CHECK_THROWS_AS(is_proper(complete_graph(2), Coloring{{1}}), InputError);
}

TEST_CASE("bipartition_of") {
  auto p = bipartition_of(path_graph(3), {0, 1, 2});
  REQUIRE(p);
  CHECK(p->side_a == VertexSet{0, 2});
  CHECK(p->side_b == VertexSet{1});

  CHECK_FALSE(bipartition_of(complete_graph(3), {0, 1, 2}));

  auto single = bipartition_of(complete_graph(3), {2});
  REQUIRE(single);
  CHECK(single->side_a == VertexSet{2});
  CHECK(single->side_b.empty());

  CHECK_THROWS_AS(bipartition_of(edgeless_graph(2), {0, 1}), InputError);
}

TEST_CASE("bipartition_of agrees with an odd-cycle search on small graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n))
      for (const auto& comp : connected_components(g)) {
        auto bip = bipartition_of(g, comp);
        CHECK(bip.has_value() == !oracle::has_odd_cycle(g, comp));
        if (bip) {
          CHECK(bip->side_a.front() == comp.front());
          for (auto [u, v] : g.edges())
            if (std::binary_search(comp.begin(), comp.end(), u))
              CHECK(std::binary_search(bip->side_a.begin(), bip->side_a.end(), u) !=
                    std::binary_search(bip->side_a.begin(), bip->side_a.end(), v));
        }
      }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(Graph(4, {{0, 1}, {2, 3}})) == std::vector<VertexSet>{{0, 1}, {2, 3}});
  CHECK(connected_components(cycle_graph(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
  CHECK(connected_components(Graph(0)).empty());

  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(uniform_int(rng, 1, 9), rng);
    auto comps = connected_components(g);
    std::vector<int> owner(g.order(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(i);
      }
    CHECK(std::find(owner.begin(), owner.end(), -1) == owner.end());
    for (auto [u, v] : g.edges())
      CHECK(owner[u] == owner[v]);
  }
}

TEST_CASE("is_complete_between") {
  CHECK(is_complete_between(complete_bipartite(2, 2), {0, 1}, {2, 3}));
  CHECK(is_complete_between(complete_graph(3), {}, {0, 1}));
  // C4 = 0-1-2-3-0: diagonals {0,2} and {1,3} are the bipartition sides.
  CHECK(is_complete_between(cycle_graph(4), {0, 2}, {1, 3}));
  CHECK_FALSE(is_complete_between(path_graph(4), {0, 2}, {1, 3}));
  CHECK_THROWS_AS(is_complete_between(complete_graph(3), {0, 1}, {1, 2}), InputError);
}

TEST_CASE("is_tree") {
  Graph k3 = complete_graph(3);
  CHECK(is_tree(k3, {1}, {}));
  CHECK_FALSE(is_tree(k3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(is_tree(path_graph(3), {0, 1, 2}, {{0, 1}, {1, 2}}));
  CHECK_FALSE(is_tree(path_graph(3), {0, 2}, {{0, 2}}));  // not an edge of g
  CHECK_FALSE(is_tree(k3, {0, 1}, {}));                   // disconnected
  CHECK_FALSE(is_tree(k3, {}, {}));
}
