#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <set>

#include "geomcore/builders.hpp"
#include "geomcore/homsearch.hpp"
#include "oracles.hpp"

using namespace geomcore;

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  for (int a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
  EXPECT_EQ(f.sub(2, 5), 4);
  EXPECT_THROW(PrimeField(6), UnsupportedError);
  EXPECT_THROW(f.inv(0), PreconditionError);
}

TEST(BinaryCode, ExtendedHammingDimension) {
  for (int m = 2; m <= 5; ++m) {
    const auto code = BinaryCode::extended_hamming(m);
    EXPECT_EQ(code.length(), 1 << m);
    EXPECT_EQ(code.dimension(), (1 << m) - m - 1) << "m = " << m;
  }
}

TEST(BinaryCode, ExtendedHammingWeightsAndDistance) {
  const auto code = BinaryCode::extended_hamming(3);
  const auto words = code.codewords();
  ASSERT_EQ(words.size(), 16u);
  std::map<int, int> weights;
  for (auto w : words) ++weights[std::popcount(w)];
  EXPECT_EQ(weights, (std::map<int, int>{{0, 1}, {4, 14}, {8, 1}}));
  for (auto a : words)
    for (auto b : words)
      if (a != b) {
        EXPECT_GE(std::popcount(a ^ b), 4);
      }
}

TEST(Designs, BuiltinsAreSteinerTripleSystems) {
  for (const Design& d : {fano(), sts9(), sts15_pg32()}) {
    EXPECT_EQ(d.k, 3);
    EXPECT_EQ(static_cast<int>(d.blocks.size()), d.v * (d.v - 1) / 6);
    EXPECT_NO_THROW(validate_design(d.v, d.k, d.blocks));
  }
}

TEST(Designs, Sts9IsAnAffinePlane) {
  // Every block and every point off it: exactly one block through the point
  // misses the block (parallelism).
  const Design d = sts9();
  for (const auto& block : d.blocks)
    for (int p = 0; p < 9; ++p) {
      if (std::find(block.begin(), block.end(), p) != block.end()) continue;
      int parallel = 0;
      for (const auto& other : d.blocks) {
        if (std::find(other.begin(), other.end(), p) == other.end()) continue;
        bool disjoint = true;
        for (int x : other) disjoint = disjoint && std::find(block.begin(), block.end(), x) == block.end();
        parallel += disjoint;
      }
      EXPECT_EQ(parallel, 1);
    }
}

TEST(OrthogonalArrays, MolsConstruction) {
  for (int n : {2, 3, 5, 7})
    for (int k = 3; k <= n + 1; ++k) EXPECT_NO_THROW(mols_oa(k, n));
  EXPECT_THROW(mols_oa(3, 6), UnsupportedError);
  EXPECT_THROW(mols_oa(3, 4), UnsupportedError);
  EXPECT_THROW(mols_oa(2, 5), PreconditionError);
  EXPECT_THROW(mols_oa(7, 5), PreconditionError);
}

TEST(OrthogonalArrays, Latin4Squares) {
  for (Latin4 which : {Latin4::Z4, Latin4::KleinFour}) {
    const auto a = latin4(which);
    EXPECT_EQ(a.k, 3);
    EXPECT_EQ(a.n, 4);
    EXPECT_NO_THROW(validate_oa(3, 4, a.columns));
  }
  EXPECT_NE(latin4(Latin4::Z4).columns, latin4(Latin4::KleinFour).columns);
}

TEST(Subsets, ColexOrderAndRank) {
  const auto subsets = colex_subsets(7, 3);
  ASSERT_EQ(subsets.size(), 35u);
  EXPECT_TRUE(std::is_sorted(subsets.begin(), subsets.end()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    EXPECT_EQ(std::popcount(subsets[i]), 3);
    EXPECT_EQ(colex_rank(subsets[i]), i);
  }
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 5), 0u);
}

TEST(Quadrangles, Gq22IsPairsAndSynthemes) {
  const auto s = gq22();
  EXPECT_EQ(s.point_count(), 15);
  EXPECT_EQ(s.line_count(), 15);
  const auto pairs = colex_subsets(6, 2);
  for (const auto& line : s.lines()) {
    std::uint64_t cover = 0;
    for (int p : line) cover |= pairs[p];
    EXPECT_EQ(cover, 63u);
  }
  // The point graph is the complement of the triangular graph T(6).
  EXPECT_EQ(point_graph(s).graph, complement(johnson(6, 2)));
}

TEST(Quadrangles, Gq24) {
  const auto s = gq24();
  EXPECT_EQ(s.point_count(), 27);
  EXPECT_EQ(s.line_count(), 45);
  const auto sp = oracle::srg(point_graph(s).graph);
  ASSERT_TRUE(sp.has_value());
  EXPECT_EQ(sp->k, 10);
  EXPECT_EQ(sp->lambda, 1);
  EXPECT_EQ(sp->mu, 5);
}

TEST(GraphFamilies, JohnsonAndKneser) {
  const auto p = oracle::srg(petersen());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->n, 10);
  EXPECT_EQ(p->k, 3);
  EXPECT_EQ(p->lambda, 0);
  EXPECT_EQ(p->mu, 1);
  EXPECT_EQ(complement(petersen()), johnson(5, 2));
  EXPECT_THROW(johnson(5, 0), PreconditionError);
  EXPECT_THROW(kneser(40, 20), PreconditionError);
}

TEST(GraphFamilies, JohnsonComplementarySubsetsAreIsomorphic) {
  for (int v = 3; v <= 8; ++v)
    for (int k = 1; k < v; ++k) {
      const Graph a = johnson(v, k), b = johnson(v, v - k);
      if (a.order() <= 9) {
        EXPECT_TRUE(oracle::isomorphic(a, b)) << v << " " << k;
      }
      EXPECT_TRUE(isomorphic(a, b).found()) << v << " " << k;
    }
}

TEST(GraphFamilies, HalvedCubes) {
  for (int n = 2; n <= 8; ++n) {
    const Graph h = halved_cube(n);
    EXPECT_EQ(h.order(), std::size_t{1} << (n - 1));
    EXPECT_EQ(regular_degree(h), n * (n - 1) / 2);
    for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(std::popcount(halved_cube_vector(n, i)) % 2, 0);
  }
  EXPECT_TRUE(oracle::isomorphic(halved_cube(4), complete_multipartite(4, 2)));
  EXPECT_THROW(halved_cube(1), PreconditionError);
  EXPECT_THROW(halved_cube(17), PreconditionError);
}

TEST(GraphFamilies, Grid) {
  const auto sp = oracle::srg(grid(3, 3));
  ASSERT_TRUE(sp.has_value());
  EXPECT_EQ(sp->k, 4);
  EXPECT_EQ(sp->lambda, 1);
  EXPECT_EQ(sp->mu, 2);
  EXPECT_EQ(grid(2, 5).order(), 10u);
}

TEST(HammingColouring, ClassesAreCosetsOfTheCode) {
  for (int n : {4, 8, 16}) {
    const auto colors = extended_hamming_coloring(n);
    const int m = std::countr_zero(static_cast<unsigned>(n));
    const auto code = BinaryCode::extended_hamming(m);
    std::set<std::uint64_t> zero_class;
    for (std::size_t i = 0; i < colors.source_size(); ++i)
      if (colors(i) == 0) zero_class.insert(halved_cube_vector(n, i));
    const auto words = code.codewords();
    EXPECT_EQ(zero_class, std::set<std::uint64_t>(words.begin(), words.end()));
    // All n colours are used, each class the same size.
    std::vector<int> sizes(n, 0);
    for (int c : colors.image) ++sizes[c];
    for (int s : sizes) EXPECT_EQ(s, static_cast<int>(colors.source_size()) / n);
  }
  EXPECT_TRUE(is_proper_coloring(halved_cube(8), extended_hamming_coloring(8), 8));
  EXPECT_THROW(extended_hamming_coloring(6), PreconditionError);
}
