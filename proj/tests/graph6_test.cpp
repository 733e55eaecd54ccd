#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "geomcore/graph6.hpp"
#include "oracles.hpp"

using namespace geomcore;

namespace {

// Reference encoder: builds the full bit string first, then packs it.
std::string reference_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<int> bits;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
    out.push_back(static_cast<char>(63 + v));
  }
  return out;
}

}  // namespace

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(graph6::encode(complete_graph(2)), "A_");
  EXPECT_EQ(graph6::encode(complete_graph(1)), "@");
  EXPECT_EQ(graph6::encode(complete_graph(4)), "C~");
  EXPECT_EQ(graph6::encode(edgeless_graph(0)), "?");
  EXPECT_EQ(graph6::decode("A_"), complete_graph(2));
  EXPECT_EQ(graph6::decode("@"), complete_graph(1));
  EXPECT_EQ(graph6::encode(edgeless_graph(63)).substr(0, 4), "~??~");
}

TEST(Graph6, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(0, 40);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const std::string text = graph6::encode(g);
    ASSERT_EQ(text, reference_encode(g));
    ASSERT_EQ(graph6::decode(text), g);
  }
}

TEST(Graph6, LargeHeaderRoundTrip) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {63u, 64u, 100u}) {
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const std::string text = graph6::encode(g);
    EXPECT_EQ(text, reference_encode(g));
    EXPECT_EQ(graph6::decode(text), g);
  }
}

TEST(Graph6, ReportsByteOffsets) {
  try {
    graph6::decode("A a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(graph6::decode(""), ParseError);
  EXPECT_THROW(graph6::decode("C"), ParseError);     // too short
  EXPECT_THROW(graph6::decode("A_?"), ParseError);   // trailing bytes
  EXPECT_THROW(graph6::decode("A`"), ParseError);    // padding bit set
  EXPECT_THROW(graph6::decode("~?"), ParseError);    // truncated header
  EXPECT_THROW(graph6::decode("~~?????"), ParseError);
}

TEST(Graph6, RejectsOversizedGraphs) {
  // n = 2^16 + 1 in the 8-byte form.
  const std::size_t n = (std::size_t{1} << 16) + 1;
  std::string text = "~~";
  for (int shift = 30; shift >= 0; shift -= 6) text.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  EXPECT_THROW(graph6::decode(text), ParseError);
}

TEST(Graph6, FileReaderCollectsErrors) {
  std::istringstream in(">>graph6<<A_\n\nbad line\n@\r\n");
  const auto entries = graph6::read_file(in);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_TRUE(entries[0].ok());
  EXPECT_EQ(entries[0].graph(), complete_graph(2));
  EXPECT_FALSE(entries[1].ok());
  EXPECT_EQ(entries[1].line, 3u);
  EXPECT_TRUE(entries[2].ok());
  EXPECT_EQ(entries[2].graph().order(), 1u);
}
