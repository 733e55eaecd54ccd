#include <gtest/gtest.h>

#include <random>

#include "geomcore/builders.hpp"
#include "geomcore/graph.hpp"
#include "oracles.hpp"

using namespace geomcore;

TEST(Bitset, BasicOperations) {
  Bitset a(130, {0, 64, 129});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_EQ(a.find_first(), 0u);
  EXPECT_EQ(a.find_next(1), 64u);
  EXPECT_EQ(a.to_vector(), (std::vector<int>{0, 64, 129}));
  Bitset full = Bitset::full(130);
  EXPECT_EQ(full.count(), 130u);
  EXPECT_TRUE(a.is_subset_of(full));
  EXPECT_EQ((~a).count(), 127u);
  EXPECT_EQ((full & a), a);
  EXPECT_EQ(a.count_and(Bitset(130, {64, 65})), 1u);
  a.subtract(Bitset(130, {64}));
  EXPECT_EQ(a.to_vector(), (std::vector<int>{0, 129}));
}

TEST(GraphBuilder, RejectsLoopsAndOutOfRange) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), PreconditionError);
  EXPECT_THROW(b.add_edge(0, 3), PreconditionError);
  EXPECT_THROW(GraphBuilder(Graph::kMaxVertices + 1), PreconditionError);
}

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(cycle_graph(7).edge_count(), 7u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
  const Graph k333 = complete_multipartite(3, 3);
  EXPECT_EQ(k333.order(), 9u);
  EXPECT_EQ(k333.edge_count(), 27u);
  EXPECT_TRUE(is_complete(complete_graph(4)));
  EXPECT_FALSE(is_complete(cycle_graph(4)));
}

TEST(Graph, ComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 12);
    const Graph c = complement(g);
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(g.edge_count() + c.edge_count(), g.order() * (g.order() - 1) / 2);
  }
}

TEST(Graph, CartesianProductOfCompleteGraphsIsGrid) {
  const Graph g = cartesian_product(complete_graph(3), complete_graph(4));
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(regular_degree(g), 5);
  EXPECT_TRUE(g.adjacent(0 * 4 + 1, 0 * 4 + 3));
  EXPECT_TRUE(g.adjacent(0 * 4 + 1, 2 * 4 + 1));
  EXPECT_FALSE(g.adjacent(0, 1 * 4 + 1));
}

TEST(Graph, InducedSubgraph) {
  const Graph p = petersen();
  const std::vector<int> verts{0, 1, 2, 3, 4};
  const Graph h = induced(p, verts);
  EXPECT_EQ(h.order(), 5u);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) {
        EXPECT_EQ(h.adjacent(a, b), p.adjacent(verts[a], verts[b]));
      }
  const std::vector<int> repeated{0, 0};
  const std::vector<int> outside{0, 10};
  EXPECT_THROW(induced(p, repeated), PreconditionError);
  EXPECT_THROW(induced(p, outside), PreconditionError);
}

TEST(Graph, SrgCheckMatchesCommonNeighbourCounting) {
  for (const Graph& g : {petersen(), cycle_graph(5), grid(3, 3), johnson(6, 2), complete_multipartite(4, 3),
                         halved_cube(4), complement(petersen())}) {
    const auto got = srg_check(g);
    const auto want = oracle::srg(g);
    ASSERT_TRUE(got.has_value());
    ASSERT_TRUE(want.has_value());
    EXPECT_EQ(got->n, want->n);
    EXPECT_EQ(got->k, want->k);
    EXPECT_EQ(got->lambda, want->lambda);
    EXPECT_EQ(got->mu, want->mu);
    EXPECT_TRUE(got->satisfies_feasibility_identity());
  }
}

TEST(Graph, SrgCheckRejectsDegenerateAndIrregular) {
  EXPECT_FALSE(srg_check(complete_graph(5)).has_value());
  EXPECT_FALSE(srg_check(edgeless_graph(5)).has_value());
  EXPECT_FALSE(srg_check(path_graph(4)).has_value());
  EXPECT_FALSE(srg_check(cycle_graph(6)).has_value());
  // Two disjoint triangles: regular with constant lambda and mu, but disconnected.
  EXPECT_FALSE(srg_check(complement(complete_multipartite(2, 3))).has_value());
}

TEST(Graph, PetersenIsDistanceRegular) {
  const auto ia = distance_regular_check(petersen());
  ASSERT_TRUE(ia.has_value());
  EXPECT_EQ(ia->diameter, 2);
  EXPECT_EQ(ia->b, (std::vector<int>{3, 2}));
  EXPECT_EQ(ia->c, (std::vector<int>{1, 1}));
  EXPECT_FALSE(distance_regular_check(path_graph(4)).has_value());
  EXPECT_THROW(distance_regular_check(edgeless_graph(3)), PreconditionError);
}

TEST(Graph, CycleIntersectionArray) {
  const auto ia = distance_regular_check(cycle_graph(7));
  ASSERT_TRUE(ia.has_value());
  EXPECT_EQ(ia->diameter, 3);
  EXPECT_EQ(ia->b, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(ia->c, (std::vector<int>{1, 1, 1}));
}

TEST(Graph, OddGirthEmptyExactlyWhenBipartite) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 10, 0.25);
    EXPECT_EQ(!odd_girth(g).has_value(), oracle::bipartite(g)) << "graph " << i;
  }
  EXPECT_EQ(odd_girth(petersen()), 5);
  EXPECT_EQ(odd_girth(cycle_graph(9)), 9);
  EXPECT_EQ(odd_girth(complete_graph(3)), 3);
}

TEST(Graph, TriangleDetection) {
  EXPECT_FALSE(has_triangle(petersen()));
  EXPECT_TRUE(has_triangle(grid(3, 3)));
  EXPECT_FALSE(has_triangle(cycle_graph(4)));
}

TEST(Graph, TwoArcCondition) {
  EXPECT_TRUE(two_arc_odd_cycle_condition(petersen()));
  EXPECT_TRUE(two_arc_odd_cycle_condition(cycle_graph(7)));
  EXPECT_THROW(two_arc_odd_cycle_condition(cycle_graph(6)), PreconditionError);
  EXPECT_THROW(two_arc_odd_cycle_condition(edgeless_graph(2)), PreconditionError);
  // A triangle with a pendant edge: the 2-arc through the pendant vertex lies on no triangle.
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2).add_edge(2, 3);
  EXPECT_FALSE(two_arc_odd_cycle_condition(std::move(b).build()));
}
