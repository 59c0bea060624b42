#include <gtest/gtest.h>

#include <map>

#include "kmetric/dimension.hpp"
#include "kmetric/fixtures.hpp"
#include "kmetric/generators.hpp"
#include "kmetric/oracles.hpp"
#include "support.hpp"

using namespace kmetric;

namespace {

VertexSet by_name(const std::string& letters) {
  VertexSet out;
  for (char c : letters) out.push_back(c - 'a');
  return out;
}

VertexSet everything(int n) {
  VertexSet all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

}  // namespace

// D(x,y) \ {x,y} for fig2, row by row. The (a,g) row is commonly printed
// as {b,c,c,f}; the correct set is {b,c,e,f}.
TEST(Dimension, Fig2DistinctiveSetsRowByRow) {
  const std::map<std::string, std::string> table{
      {"ab", "cdefg"}, {"ac", "defg"}, {"ad", "cefg"}, {"ae", "bdfg"}, {"af", "bdeg"}, {"ag", "bcef"},
      {"bc", "a"},     {"bd", "aefg"}, {"be", "acfg"}, {"bf", "aceg"}, {"bg", "acdf"}, {"cd", "efg"},
      {"ce", "abfg"},  {"cf", "abeg"}, {"cg", "abdf"}, {"de", "abc"},  {"df", "abcg"}, {"dg", "abce"},
      {"ef", "g"},     {"eg", "abcd"}, {"fg", "abcde"}};
  ASSERT_EQ(table.size(), 21u);
  const Graph g = fixtures::fig2();
  const DistanceMatrix dm(g);
  for (const auto& [pair, rest] : table) {
    const Vertex x = pair[0] - 'a';
    const Vertex y = pair[1] - 'a';
    VertexSet expected = by_name(rest);
    expected.push_back(x);
    expected.push_back(y);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(distinctive_set(g, dm, x, y).members, expected) << pair;
  }
}

TEST(Dimension, Fig2IsThreeDimensional) {
  const Graph g = fixtures::fig2();
  const auto r = metric_dimensionality(g, DistanceMatrix(g));
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.witness_pair, (VertexPair{1, 2}));
  EXPECT_EQ(r.witness_set.members, by_name("abc"));
}

TEST(Dimension, Fig1IsTwoDimensional) {
  const Graph g = fixtures::fig1();
  const auto r = metric_dimensionality(g, DistanceMatrix(g));
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.witness_pair, (VertexPair{5, 6}));
  EXPECT_EQ(r.witness_set.members, (VertexSet{5, 6}));
}

TEST(Dimension, ElementaryFamilies) {
  for (int n = 2; n <= 10; ++n) {
    const Graph g = complete_graph(n);
    EXPECT_EQ(metric_dimensionality(g, DistanceMatrix(g)).k, 2) << n;
  }
  for (int n = 3; n <= 12; ++n) {
    const Graph g = path_graph(n);
    EXPECT_EQ(metric_dimensionality(g, DistanceMatrix(g)).k, n - 1) << n;
  }
}

// P_2 is K_2: both endpoints always distinguish themselves, so Dim is 2 and
// the path formula n - 1 applies only from n = 3 on.
TEST(Dimension, TwoVertexPathIsComplete) {
  const Graph g = path_graph(2);
  EXPECT_EQ(g, complete_graph(2));
  EXPECT_EQ(metric_dimensionality(g, DistanceMatrix(g)).k, 2);
  EXPECT_EQ(oracle::naive_dimension(g), 2);
}

TEST(Dimension, MatchesNaiveOracleExhaustively) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : corpus::connected_graphs(n)) {
      const DistanceMatrix dm(g);
      const auto r = metric_dimensionality(g, dm);
      ASSERT_EQ(r.k, oracle::naive_dimension(g)) << to_edge_list(g);
      ASSERT_EQ(distinctive_count(dm, r.witness_pair.first, r.witness_pair.second), r.k);
    }
  }
}

TEST(Dimension, CyclesMatchOracle) {
  for (int n = 3; n <= 12; ++n) {
    const Graph g = cycle_graph(n);
    EXPECT_EQ(metric_dimensionality(g, DistanceMatrix(g)).k, oracle::naive_dimension(g)) << n;
  }
}

// Dim(G) = k means V is a k-metric generator and not a (k+1)-metric generator.
TEST(Dimension, WholeVertexSetIsExactlyKGenerator) {
  for (const auto& g : corpus::random_corpus(40, 20)) {
    if (g.order() < 2) continue;
    const DistanceMatrix dm(g);
    const int k = metric_dimensionality(g, dm).k;
    const auto all = everything(g.order());
    EXPECT_TRUE(is_k_metric_generator(g, dm, all, k));
    EXPECT_FALSE(is_k_metric_generator(g, dm, all, k + 1));
    EXPECT_GE(k, 2);
  }
}

TEST(Dimension, GeneratorSubsets) {
  const Graph g = path_graph(4);
  const DistanceMatrix dm(g);
  EXPECT_TRUE(is_k_metric_generator(g, dm, VertexSet{0}, 1));
  EXPECT_FALSE(is_k_metric_generator(g, dm, VertexSet{1}, 1));
  EXPECT_TRUE(is_k_metric_generator(g, dm, VertexSet{0, 3}, 2));
}

TEST(Dimension, DistinctiveSetAlwaysHoldsThePair) {
  const Graph g = random_connected_graph(15, 0.2, RandomSeed{3});
  const DistanceMatrix dm(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      const auto d = distinctive_set(g, dm, x, y);
      EXPECT_TRUE(set_contains(d.members, x));
      EXPECT_TRUE(set_contains(d.members, y));
      EXPECT_EQ(static_cast<int>(d.members.size()), distinctive_count(dm, x, y));
    }
  }
}

TEST(Dimension, Errors) {
  const Graph g = path_graph(3);
  const DistanceMatrix dm(g);
  EXPECT_THROW(distinctive_set(g, dm, 1, 1), Error);
  try {
    distinctive_set(g, dm, 1, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SamePair);
  }
  try {
    const Graph one(1, {});
    metric_dimensionality(one, DistanceMatrix(one));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooSmall);
  }
  try {
    const Graph split(4, {{0, 1}, {2, 3}});
    metric_dimensionality(split, DistanceMatrix(split));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Disconnected);
  }
}
