#include <gtest/gtest.h>

#include <random>

#include "geomcore/builders.hpp"
#include "geomcore/cliques.hpp"
#include "geomcore/homsearch.hpp"
#include "oracles.hpp"

using namespace geomcore;

namespace {

// C5 with a pendant vertex attached to vertex 0; its core is C5.
Graph c5_with_pendant() {
  GraphBuilder b(6);
  for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
  b.add_edge(0, 5);
  return std::move(b).build();
}

Graph cone(const Graph& g) {
  GraphBuilder b(g.order() + 1);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (std::size_t v = 0; v < g.order(); ++v) b.add_edge(v, g.order());
  return std::move(b).build();
}

// Core by definition: every endomorphism is a bijection.
bool brute_is_core(const Graph& g) {
  for (const auto& f : oracle::all_homs(g, g)) {
    std::vector<int> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  return true;
}

}  // namespace

TEST(HomSearch, AgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 400; ++i) {
    const Graph x = oracle::random_graph(rng, 1 + i % 7);
    const Graph y = oracle::random_graph(rng, 1 + (i / 7) % 5);
    const auto r = find_homomorphism(x, y);
    ASSERT_NE(r.outcome, Outcome::Exhausted);
    EXPECT_EQ(r.found(), oracle::hom_exists(x, y)) << "pair " << i;
    if (r.found()) {
      EXPECT_TRUE(is_homomorphism(x, y, *r.witness));
    }
  }
}

TEST(HomSearch, EndomorphismEnumerationMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 5);
    const auto got = enumerate_endomorphisms(g);
    ASSERT_TRUE(got.complete);
    std::vector<std::vector<int>> images;
    for (const auto& f : got.maps) images.push_back(f.image);
    EXPECT_EQ(images, oracle::all_homs(g, g)) << "graph " << i;
  }
}

TEST(HomSearch, ColouringMatchesBacktrackingOracle) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 11);
    for (int q = 1; q <= 4; ++q) {
      const auto r = k_colorable(g, q);
      EXPECT_EQ(r.found(), oracle::colorable(g, q)) << "graph " << i << " q " << q;
      if (r.found()) {
        EXPECT_TRUE(is_proper_coloring(g, *r.witness, q));
      }
    }
  }
}

TEST(HomSearch, Gq24NeedsFiveColours) {
  // Cocliques have at most 6 of the 27 points, so 4 colours cannot suffice.
  const Graph x = point_graph(gq24()).graph;
  for (int q : {3, 4}) {
    EXPECT_FALSE(k_colorable(x, q).found());
    EXPECT_FALSE(oracle::colorable(x, q));
  }
  EXPECT_EQ(max_cliques(complement(x)).front().size(), 6u);
}

TEST(HomSearch, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphisms(petersen()).maps.size(), 120u);
  EXPECT_EQ(automorphisms(cycle_graph(5)).maps.size(), 10u);
  EXPECT_EQ(automorphisms(complete_multipartite(3, 3)).maps.size(), 1296u);
  const auto gq = automorphisms(point_graph(gq22()).graph);
  EXPECT_EQ(gq.maps.size(), 720u);
  for (const auto& f : gq.maps) EXPECT_TRUE(is_automorphism(point_graph(gq22()).graph, f));
}

TEST(HomSearch, Orbits) {
  const auto orbits = vertex_orbits(path_graph(5));
  ASSERT_TRUE(orbits.complete);
  EXPECT_EQ(orbits.orbit[0], orbits.orbit[4]);
  EXPECT_EQ(orbits.orbit[1], orbits.orbit[3]);
  EXPECT_NE(orbits.orbit[0], orbits.orbit[2]);
  EXPECT_EQ(orbits.representatives(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(is_vertex_transitive(petersen()), Decision::Yes);
  EXPECT_EQ(is_vertex_transitive(c5_with_pendant()), Decision::No);
}

TEST(HomSearch, Isomorphism) {
  EXPECT_TRUE(isomorphic(complement(petersen()), johnson(5, 2)).found());
  EXPECT_TRUE(isomorphic(halved_cube(4), complete_multipartite(4, 2)).found());
  EXPECT_FALSE(isomorphic(cycle_graph(6), complement(complete_multipartite(2, 3))).found());
  const auto r = isomorphic(grid(3, 3), complement(grid(3, 3)));
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_homomorphism(grid(3, 3), complement(grid(3, 3)), *r.witness));
}

TEST(HomSearch, DistanceTwoTransitivity) {
  EXPECT_EQ(is_distance_two_transitive(petersen()), Decision::Yes);
  EXPECT_EQ(is_distance_two_transitive(point_graph(gq22()).graph), Decision::Yes);
  EXPECT_EQ(is_distance_two_transitive(path_graph(5)), Decision::No);
}

TEST(Cores, IsCoreMatchesDefinitionOnSmallGraphs) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int i = 0; checked < 60 && i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 6);
    if (!is_connected(g)) continue;
    ++checked;
    const auto r = is_core(g);
    EXPECT_EQ(r.core == Decision::Yes, brute_is_core(g)) << "graph " << i;
    if (r.proper_endomorphism) {
      EXPECT_TRUE(is_homomorphism(g, g, *r.proper_endomorphism));
      EXPECT_FALSE(r.proper_endomorphism->is_injective());
    }
  }
}

TEST(Cores, ClassifyKnownGraphs) {
  const auto bip = classify_core(cycle_graph(6));
  EXPECT_EQ(bip.verdict, CoreVerdict::CompleteCore);
  EXPECT_EQ(bip.q, 2);
  EXPECT_EQ(classify_core(cycle_graph(5)).verdict, CoreVerdict::Core);
  EXPECT_EQ(classify_core(petersen()).verdict, CoreVerdict::Core);
  const auto k333 = classify_core(complete_multipartite(3, 3));
  EXPECT_EQ(k333.verdict, CoreVerdict::CompleteCore);
  EXPECT_EQ(k333.q, 3);
  ASSERT_TRUE(k333.coloring.has_value());
  EXPECT_TRUE(is_proper_coloring(complete_multipartite(3, 3), *k333.coloring, 3));
  const auto k5 = classify_core(complete_graph(5));
  EXPECT_EQ(k5.verdict, CoreVerdict::CompleteCore);
  EXPECT_EQ(k5.q, 5);
}

TEST(Cores, OtherVerdictCarriesRetraction) {
  const Graph g = c5_with_pendant();
  const auto r = classify_core(g);
  EXPECT_EQ(r.verdict, CoreVerdict::Other);
  EXPECT_EQ(r.core_order, 5);
  ASSERT_TRUE(r.proper_endomorphism.has_value());
  EXPECT_TRUE(is_homomorphism(g, g, *r.proper_endomorphism));
  EXPECT_LT(r.proper_endomorphism->image_size(), g.order());
}

TEST(Cores, DisconnectedInputIsAPreconditionError) {
  EXPECT_THROW(classify_core(edgeless_graph(3)), PreconditionError);
  EXPECT_THROW(is_core(complement(complete_multipartite(2, 3))), PreconditionError);
}

TEST(Cores, BudgetExhaustionIsReported) {
  const Graph x = point_graph(gq22()).graph;
  const auto endos = enumerate_endomorphisms(x, SearchBudget{.nodes = 10});
  EXPECT_FALSE(endos.complete);
  const auto core = classify_core(halved_cube(5), SearchBudget{.nodes = 10});
  EXPECT_EQ(core.verdict, CoreVerdict::Unknown);
  EXPECT_FALSE(core.reason.empty());
}

TEST(Cores, ParallelSearchIsDeterministic) {
  for (const Graph& g : {point_graph(gq24()).graph, halved_cube(5), petersen(), c5_with_pendant()}) {
    const auto a = classify_core(g, SearchBudget{.jobs = 1});
    const auto b = classify_core(g, SearchBudget{.jobs = 6});
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.coloring, b.coloring);
    EXPECT_EQ(a.proper_endomorphism, b.proper_endomorphism);
    EXPECT_EQ(a.targets_refuted, b.targets_refuted);
  }
  const Graph x = point_graph(gq22()).graph;
  EXPECT_EQ(enumerate_endomorphisms(x, SearchBudget{.jobs = 1}).maps,
            enumerate_endomorphisms(x, SearchBudget{.jobs = 8}).maps);
}

TEST(LocalStructure, Kinds) {
  const auto t6 = local_structure(johnson(6, 2), 0);
  EXPECT_EQ(t6.kind, LocalStructure::Kind::Grid);
  EXPECT_EQ(t6.a, 2);
  EXPECT_EQ(t6.b, 4);
  // In the rook's graph grid(3,3) a neighbourhood is two disjoint edges.
  EXPECT_EQ(local_structure(grid(3, 3), 0).kind, LocalStructure::Kind::Other);
  EXPECT_EQ(local_structure(petersen(), 0).kind, LocalStructure::Kind::Other);
  const Graph apex = cone(point_graph(gq22()).graph);
  const auto gq = local_structure(apex, 15);
  EXPECT_EQ(gq.kind, LocalStructure::Kind::GQPointGraph);
  EXPECT_EQ(gq.a, 2);
  EXPECT_EQ(gq.b, 2);
}

TEST(ImageTheorem, Quadrangles) {
  EXPECT_EQ(verify_endomorphism_image_theorem(make_geometry(gq22())).kind, ImageTheoremResult::Kind::Consistent);
  EXPECT_EQ(verify_endomorphism_image_theorem(make_geometry(gq24())).kind, ImageTheoremResult::Kind::Consistent);
}

TEST(ImageTheorem, BigAlpha) {
  // OA(3,5): alpha = 2 > 3/2 and only lines are maximum cliques.
  const auto r = verify_endomorphism_image_theorem(oa_to_geometry(mols_oa(3, 5)));
  EXPECT_EQ(r.kind, ImageTheoremResult::Kind::Consistent) << r.reason;
  // AG(2,3) block graph: non-line 4-cliques break the hypothesis.
  EXPECT_EQ(verify_endomorphism_image_theorem(design_to_geometry(sts9())).kind,
            ImageTheoremResult::Kind::HypothesisFailed);
  EXPECT_EQ(verify_endomorphism_image_theorem(oa_to_geometry(mols_oa(3, 3))).kind,
            ImageTheoremResult::Kind::HypothesisFailed);
}

TEST(DivisorLemma, VertexTransitiveGraphs) {
  const auto p = core_order_divides(petersen());
  EXPECT_EQ(p.kind, DivisorResult::Kind::Holds);
  EXPECT_EQ(p.core_order, 10);
  const auto h = core_order_divides(halved_cube(4));
  EXPECT_EQ(h.kind, DivisorResult::Kind::Holds);
  EXPECT_EQ(h.core_order, 4);
  EXPECT_EQ(core_order_divides(c5_with_pendant()).kind, DivisorResult::Kind::NotApplicable);
  EXPECT_EQ(core_order_divides(cycle_graph(8)).core_order, 2);
}
