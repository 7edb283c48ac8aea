#include "doctest.h"

#include "minorforge/certificates.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/families.hpp"
#include "oracles.hpp"

using namespace minorforge;

TEST_CASE("odd expansion verifier") {
  OddExpansion single{{Tree{{0}, {}}}, {{0, 1}}, {}};
  CHECK(verify_odd_expansion(complete_graph(1), single).ok());

  Graph k2 = complete_graph(2);
  OddExpansion pair{{Tree{{0}, {}}, Tree{{1}, {}}}, {{0, 1}, {1, 1}}, {Link{0, 1, 0, 1}}};
  CHECK(verify_odd_expansion(k2, pair).ok());

  OddExpansion bichromatic = pair;
  bichromatic.colors[1] = 2;
  CHECK_FALSE(verify_odd_expansion(k2, bichromatic).ok());

  OddExpansion no_connector = pair;
  no_connector.connectors.clear();
  CHECK_FALSE(verify_odd_expansion(k2, no_connector).ok());

  Graph p3 = path_graph(3);
  OddExpansion mono_tree{{Tree{{0, 1}, {{0, 1}}}, Tree{{2}, {}}}, {{0, 1}, {1, 1}, {2, 1}},
                         {Link{0, 1, 1, 2}}};
  CHECK_FALSE(verify_odd_expansion(p3, mono_tree).ok());

  OddExpansion overlapping{{Tree{{0}, {}}, Tree{{0}, {}}}, {{0, 1}}, {Link{0, 1, 0, 0}}};
  CHECK_FALSE(verify_odd_expansion(k2, overlapping).ok());

  OddExpansion bad_color{{Tree{{0}, {}}}, {{0, 3}}, {}};
  CHECK_FALSE(verify_odd_expansion(k2, bad_color).ok());
}

TEST_CASE("minor model verifier") {
  Graph c5 = cycle_graph(5);
  MinorModel k3{{{0, 1}, {2}, {3, 4}}, {Link{0, 1, 1, 2}, Link{0, 2, 0, 4}, Link{1, 2, 2, 3}}};
  CHECK(verify_minor_model(c5, k3).ok());

  MinorModel sharing{{{0, 1}, {1, 2}}, {Link{0, 1, 0, 1}}};
  CHECK_FALSE(verify_minor_model(c5, sharing).ok());

  MinorModel disconnected{{{0, 2}, {1}}, {Link{0, 1, 0, 1}}};
  CHECK_FALSE(verify_minor_model(c5, disconnected).ok());

  Graph k33 = complete_bipartite(3, 3);
  MinorModel one_side{{{0}, {1}, {2}}, {}};
  CHECK_FALSE(verify_minor_model(k33, one_side).ok());
}

TEST_CASE("expansion to minor model") {
  Graph k2 = complete_graph(2);
  OddExpansion pair{{Tree{{0}, {}}, Tree{{1}, {}}}, {{0, 1}, {1, 1}}, {Link{0, 1, 0, 1}}};
  MinorModel m = expansion_to_minor_model(k2, pair);
  CHECK(m.branch_sets == std::vector<VertexSet>{{0}, {1}});
  CHECK(verify_minor_model(k2, m).ok());

  OddExpansion single{{Tree{{0}, {}}}, {{0, 1}}, {}};
  CHECK(expansion_to_minor_model(complete_graph(1), single).branch_sets ==
        std::vector<VertexSet>{{0}});

  OddExpansion bad = pair;
  bad.colors[1] = 2;
  CHECK_THROWS_AS(expansion_to_minor_model(k2, bad), InputError);
}

TEST_CASE("oracle examples") {
  CHECK(odd_clique_minor_number(complete_graph(4)) == 4);
  CHECK(odd_clique_minor_number(cycle_graph(5)) == 3);
  CHECK(odd_clique_minor_number(complete_bipartite(3, 3)) == 2);
  CHECK(odd_clique_minor_number(edgeless_graph(3)) == 1);
  CHECK(clique_minor_number(complete_bipartite(3, 3)) == 4);
  CHECK(clique_minor_number(cycle_graph(5)) == 3);
  CHECK(clique_minor_number(path_graph(5)) == 2);
  CHECK_THROWS_AS(clique_minor_number(complete_graph(9)), SizeLimitError);
  CHECK_THROWS_AS(odd_clique_minor_number(complete_graph(9)), SizeLimitError);
}

TEST_CASE("bipartite graphs have odd clique minor number at most 2") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4 && a + b <= 8; ++b)
      CHECK(odd_clique_minor_number(complete_bipartite(a, b)) == 2);
  CHECK(odd_clique_minor_number(cycle_graph(8)) == 2);
}

TEST_CASE("oracles match brute force on up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : graphs_up_to_isomorphism(n)) {
      const int minor = clique_minor_number(g);
      const int odd = odd_clique_minor_number(g);
      CHECK(minor == oracle::clique_minor_number(g));
      CHECK(odd == oracle::odd_clique_minor_number(g));
      CHECK(odd <= minor);
    }
}
