#include "doctest.h"

#include "minorforge/decompose.hpp"
#include "minorforge/enumerate.hpp"
#include "minorforge/families.hpp"

using namespace minorforge;

TEST_CASE("connected bipartite graphs form a single part") {
  for (Graph g : {path_graph(5), cycle_graph(6), complete_bipartite(2, 3), crown(3)}) {
    auto p = bipartite_connected_partition(g);
    REQUIRE(p.parts.size() == 1);
    CHECK(static_cast<int>(p.parts[0].size()) == g.order());
    auto c = partition_coloring(g, p);
    CHECK(c.max_color() == 2);
    CHECK(is_proper(g, c));
  }
}

TEST_CASE("C5 and K4 partitions") {
  Graph c5 = cycle_graph(5);
  auto p = bipartite_connected_partition(c5);
  CHECK(p.parts == std::vector<VertexSet>{{0, 1, 2, 3}, {4}});
  CHECK(p.sides[0] == Bipartition{{0, 2}, {1, 3}});
  CHECK(partition_coloring(c5, p) == Coloring{{1, 2, 1, 2, 3}});

  Graph k4 = complete_graph(4);
  auto q = bipartite_connected_partition(k4);
  CHECK(q.parts == std::vector<VertexSet>{{0, 1}, {2, 3}});
  CHECK(partition_coloring(k4, q) == Coloring{{1, 2, 3, 4}});
}

TEST_CASE("verify_partition rejects bad partitions") {
  Graph c5 = cycle_graph(5);
  PartitionCertificate reversed{{{4}, {0, 1, 2, 3}}, {{{4}, {}}, {{0, 2}, {1, 3}}}};
  CHECK_FALSE(verify_partition(c5, reversed).ok());
  CHECK_THROWS_AS(partition_coloring(c5, reversed), InputError);

  PartitionCertificate odd{{{0, 1, 2, 3, 4}}, {{{0, 2, 4}, {1, 3}}}};
  CHECK_FALSE(verify_partition(c5, odd).ok());

  PartitionCertificate missing{{{0, 1, 2, 3}}, {{{0, 2}, {1, 3}}}};
  CHECK_FALSE(verify_partition(c5, missing).ok());

  PartitionCertificate wrong_sides{{{0, 1, 2, 3}, {4}}, {{{0, 1}, {2, 3}}, {{4}, {}}}};
  CHECK_FALSE(verify_partition(c5, wrong_sides).ok());

  Graph two = edgeless_graph(2);
  PartitionCertificate disconnected{{{0, 1}}, {{{0}, {1}}}};
  CHECK_FALSE(verify_partition(two, disconnected).ok());
}

TEST_CASE("partition property on random graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(uniform_int(rng, 1, 14), rng);
    auto p = bipartite_connected_partition(g);
    CHECK(verify_partition(g, p).ok());
    CHECK(is_proper(g, partition_coloring(g, p)));
  }
}

TEST_CASE("bfs spanning tree") {
  Graph c5 = cycle_graph(5);
  CHECK(bfs_spanning_tree(c5, {0, 1, 2, 3}) == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(bfs_spanning_tree(c5, {4}).empty());
  Graph k4 = complete_graph(4);
  CHECK(bfs_spanning_tree(k4, {0, 1, 2, 3}) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}
