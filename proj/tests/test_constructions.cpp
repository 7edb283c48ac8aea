#include "doctest.h"

#include "minorforge/bounds.hpp"
#include "minorforge/certificates.hpp"
#include "minorforge/constructions.hpp"
#include "minorforge/decompose.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/families.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace minorforge;

namespace {

int label_index(const Graph& g, const Label& l) {
  const auto& labels = *g.labels();
  return static_cast<int>(std::find(labels.begin(), labels.end(), l) - labels.begin());
}

}  // namespace

TEST_CASE("find_monochromatic_edge") {
  Graph k3 = complete_graph(3);
  PartitionCertificate p{{{0, 1}, {2}}, {{{0}, {1}}, {{2}, {}}}};
  CHECK(find_monochromatic_edge(k3, p, {1, 2, 1}, {0, 1}, {2}) == Edge{0, 2});
  CHECK(find_monochromatic_edge(k3, p, {1, 2, 2}, {0, 1}, {2}) == Edge{1, 2});

  Graph k2 = complete_graph(2);
  PartitionCertificate q{{{0}, {1}}, {{{0}, {}}, {{1}, {}}}};
  CHECK(find_monochromatic_edge(k2, q, {1, 1}, {0}, {1}) == Edge{0, 1});

  Graph c5 = cycle_graph(5);
  auto r = bipartite_connected_partition(c5);
  CHECK(find_monochromatic_edge(c5, r, {1, 2, 1, 2, 1}, {0, 1, 2, 3}, {4}) == Edge{0, 4});
  CHECK(find_monochromatic_edge(c5, r, {1, 2, 1, 2, 2}, {0, 1, 2, 3}, {4}) == Edge{3, 4});
}

TEST_CASE("extract_odd_expansion on K4 takes the second case") {
  Graph k4 = complete_graph(4);
  auto p = bipartite_connected_partition(k4);
  ZigzagWitness w{{0, 1, 2, 3}, Coloring{{1, 2, 3, 4}}};
  auto x = extract_odd_expansion(k4, p, w);
  CHECK(x.order() == 3);
  CHECK(verify_odd_expansion(k4, x).ok());

  ZigzagWitness bad{{0, 1, 2, 3}, Coloring{{2, 1, 3, 4}}};
  CHECK_THROWS_AS(extract_odd_expansion(k4, p, bad), InputError);
}

TEST_CASE("odd_hadwiger_witness examples") {
  auto k6 = odd_hadwiger_witness(complete_graph(6));
  CHECK(k6.zigzag_length == 6);
  CHECK(k6.expansion.order() == 4);
  CHECK(verify_odd_expansion(complete_graph(6), k6.expansion).ok());

  for (Graph forest : {path_graph(4), Graph(5, {{0, 1}, {0, 2}, {3, 4}}), complete_bipartite(1, 4)}) {
    auto res = odd_hadwiger_witness(forest);
    CHECK(res.expansion.order() == 2);
    CHECK(verify_odd_expansion(forest, res.expansion).ok());
  }

  Graph c5 = schrijver(5, 2);
  auto res = odd_hadwiger_witness(c5);
  CHECK(res.expansion.order() >= 2);
  CHECK(verify_odd_expansion(c5, res.expansion).ok());

  Graph petersen = kneser(5, 2);
  auto pet = odd_hadwiger_witness(petersen);
  CHECK(verify_odd_expansion(petersen, pet.expansion).ok());
  CHECK(pet.expansion.order() >= 2);

  CHECK(odd_hadwiger_witness(edgeless_graph(3)).expansion.order() == 1);
  CHECK(odd_hadwiger_witness(Graph(0)).expansion.order() == 0);
}

TEST_CASE("odd-Hadwiger witness order against brute force") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n)) {
      auto res = odd_hadwiger_witness(g);
      CHECK(verify_odd_expansion(g, res.expansion).ok());
      const int z = oracle::zig(g);
      CHECK(res.expansion.order() >= z / 2 + 1);
      CHECK(res.expansion.order() == res.zigzag_length / 2 + 1);
      CHECK(res.expansion.order() <= oracle::odd_clique_minor_number(g));
    }
}

TEST_CASE("odd-Hadwiger witness on random 7-vertex graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(7, rng);
    auto res = odd_hadwiger_witness(g);
    CHECK(verify_odd_expansion(g, res.expansion).ok());
    CHECK(res.expansion.order() >= zig(g).zig / 2 + 1);
  }
}

TEST_CASE("dolnikov examples") {
  auto two = extract_minor_from_kneser_rep(Hypergraph(2, {{1}, {2}}));
  CHECK(two.t == 2);
  CHECK(two.model.branch_sets == std::vector<VertexSet>{{0}, {1}});
  CHECK(verify_minor_model(two.kneser, two.model).ok());

  auto pet = extract_minor_from_kneser_rep(Hypergraph(5, subsets_of_size(5, 2)));
  CHECK(pet.t == 3);
  CHECK(pet.model.order() == 3);
  CHECK(verify_minor_model(kneser(5, 2), pet.model).ok());

  auto tri = extract_minor_from_kneser_rep(Hypergraph(3, subsets_of_size(3, 2)));
  CHECK(tri.t == 1);
  CHECK(tri.model.order() == 1);

  auto none = extract_minor_from_kneser_rep(Hypergraph(4, {{1, 2}, {3, 4}}));
  CHECK(none.t == 0);
  CHECK(none.model.order() == 0);
}

TEST_CASE("Kneser-representation minors against brute force") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = random_hypergraph(6, 8, rng);
    auto res = extract_minor_from_kneser_rep(h);
    CHECK(res.t == oracle::cd(h));
    CHECK(res.model.order() == res.t);
    CHECK(verify_minor_model(res.kneser, res.model).ok());
    CHECK(res.t <= oracle::chromatic_number(res.kneser));
  }
}

TEST_CASE("schrijver expansion examples") {
  auto x = schrijver_expansion(14, 4);
  Graph s = schrijver(14, 4);
  CHECK(verify_odd_expansion(s, x).ok());
  REQUIRE(x.order() == 8);
  for (int i = 0; i < 6; ++i) {
    CHECK(x.trees[i].vertices.size() == 7);
    CHECK(x.trees[i].edges.size() == 6);
    int leaves = 0;
    for (Vertex v : x.trees[i].vertices) {
      int deg = 0;
      for (auto [a, b] : x.trees[i].edges)
        deg += (a == v) + (b == v);
      CHECK(deg <= 2);
      leaves += deg == 1;
    }
    CHECK(leaves == 2);
  }

  for (int k = 1; k <= 5; ++k) {
    auto y = schrijver_expansion(2 * k, k);
    REQUIRE(y.order() == 2);
    CHECK(y.colors.at(0) == 1);
    CHECK(y.colors.at(1) == 1);
    CHECK(y.connectors.size() == 1);
  }

  Graph s72 = schrijver(7, 2);
  auto z = schrijver_expansion(7, 2);
  REQUIRE(z.order() == 5);
  CHECK(verify_odd_expansion(s72, z).ok());
  const VertexSet first = {label_index(s72, {1, 4}), label_index(s72, {2, 4}), label_index(s72, {3, 5})};
  CHECK(z.trees[0].vertices == sorted_unique(first));
  CHECK(z.trees[3].vertices == VertexSet{label_index(s72, {1, 3})});
  CHECK(z.trees[4].vertices == VertexSet{label_index(s72, {2, 7})});
  // tree colors come from c restricted to [3]: c({1}) = c({2}) = 1, c({3}) = 2
  CHECK(z.colors.at(label_index(s72, {1, 4})) == 1);
  CHECK(z.colors.at(label_index(s72, {2, 4})) == 1);
  CHECK(z.colors.at(label_index(s72, {3, 5})) == 2);

  CHECK_THROWS_AS(schrijver_expansion(5, 3), InputError);
}

TEST_CASE("schrijver expansions over the full range") {
  for (int n = 2; n <= 13; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      auto x = schrijver_expansion(n, k);
      CHECK(verify_odd_expansion(schrijver(n, k), x).ok());
      CHECK(x.order() == n - 2 * k + 2);
      for (int i = 0; i < n - 2 * k; ++i)
        CHECK(static_cast<int>(x.trees[i].vertices.size()) == 2 * k - 1);
    }
}

TEST_CASE("schrijver minor models") {
  CHECK(schrijver_minor_model(5, 2).order() == 3);
  CHECK(verify_minor_model(schrijver(5, 2), schrijver_minor_model(5, 2)).ok());
  CHECK(schrijver_minor_model(6, 3).order() == 2);
  CHECK(verify_minor_model(schrijver(8, 3), schrijver_minor_model(8, 3)).ok());
  CHECK(schrijver_minor_model(8, 3).order() == 4);
}
