#include <gtest/gtest.h>

#include "kmetric/boundary_bounds.hpp"
#include "kmetric/dimension.hpp"
#include "kmetric/fixtures.hpp"
#include "kmetric/generators.hpp"
#include "kmetric/geodesic_bounds.hpp"
#include "kmetric/oracles.hpp"
#include "support.hpp"

using namespace kmetric;

namespace {

bool has_pair(const std::vector<VertexPair>& pairs, Vertex u, Vertex v) {
  return std::find(pairs.begin(), pairs.end(), ordered(u, v)) != pairs.end();
}

// Ball members with a neighbor outside the ball, from the edge list alone.
VertexSet naive_boundary(const Graph& g, Vertex v, int m) {
  const auto d = oracle::floyd_warshall(g);
  const auto& row = d[static_cast<std::size_t>(v)];
  VertexSet out;
  for (const auto& [a, b] : g.edges()) {
    const bool a_in = row[static_cast<std::size_t>(a)] <= m;
    const bool b_in = row[static_cast<std::size_t>(b)] <= m;
    if (a_in && !b_in) out.push_back(a);
    if (b_in && !a_in) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST(Boundary, Fig1Profiles) {
  const Graph g = fixtures::fig1();
  const DistanceMatrix dm(g);
  const auto a = boundary_profile(g, dm, 5, 1);
  EXPECT_EQ(a.ball, (VertexSet{4, 5, 7}));
  EXPECT_EQ(a.sphere, (VertexSet{4, 7}));
  EXPECT_EQ(a.boundary, (VertexSet{4, 7}));
  EXPECT_EQ(boundary_profile(g, dm, 6, 1).boundary, a.boundary);
  EXPECT_TRUE(boundary_profile(g, dm, 5, dm.diameter()).boundary.empty());
}

TEST(Boundary, PathProfile) {
  const Graph g = path_graph(5);
  const DistanceMatrix dm(g);
  const auto p = boundary_profile(g, dm, 0, 2);
  EXPECT_EQ(p.sphere, (VertexSet{2}));
  EXPECT_EQ(p.boundary, (VertexSet{2}));
  EXPECT_EQ(p.ball, (VertexSet{0, 1, 2}));
}

TEST(Boundary, MatchesEdgeScan) {
  for (const auto& g : corpus::random_corpus(25, 18)) {
    const DistanceMatrix dm(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (int m = 0; m <= dm.diameter(); ++m) {
        ASSERT_EQ(boundary_profile(g, dm, v, m).boundary, naive_boundary(g, v, m));
      }
    }
  }
}

TEST(Boundary, RadiusOutOfRange) {
  const Graph g = path_graph(4);
  const DistanceMatrix dm(g);
  for (int bad : {-1, 4}) {
    try {
      boundary_profile(g, dm, 0, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::RadiusOutOfRange);
    }
  }
}

TEST(EqualBoundary, Fig1Pairs) {
  const Graph g = fixtures::fig1();
  const DistanceMatrix dm(g);
  const auto m1 = equal_boundary_pairs(g, dm, 1);
  EXPECT_TRUE(has_pair(m1, 5, 6));   // a, b
  EXPECT_TRUE(has_pair(m1, 1, 3));   // v1, v2
  EXPECT_TRUE(has_pair(m1, 8, 10));  // v3, v4
  const auto m2 = equal_boundary_pairs(g, dm, 2);
  EXPECT_TRUE(has_pair(m2, 0, 2));   // u1, u2
  EXPECT_TRUE(has_pair(m2, 9, 11));  // u3, u4
}

TEST(EqualBoundary, P3EndsShareCenter) {
  const Graph g = path_graph(3);
  const DistanceMatrix dm(g);
  EXPECT_TRUE(has_pair(equal_boundary_pairs(g, dm, 1), 0, 2));
  EXPECT_TRUE(boundary_equidistance_holds(g, dm, 0, 2, 1));
}

TEST(Eta, Fig1) {
  const Graph g = fixtures::fig1();
  const DistanceMatrix dm(g);
  const auto r = eta_bound(g, dm);
  ASSERT_TRUE(r.eta);
  EXPECT_EQ(*r.eta, 2);
  EXPECT_EQ(r.witness->radius, 1);
  EXPECT_EQ(r.witness->pair, (VertexPair{5, 6}));
  EXPECT_EQ(eta_value(dm, 5, 6, 1), 2);
  EXPECT_FALSE(balls_cover_graph(dm, 5, 6, 1));
}

TEST(Eta, CompleteGraphsHaveNone) {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = complete_graph(n);
    const auto r = eta_bound(g, DistanceMatrix(g));
    EXPECT_FALSE(r.eta);
    EXPECT_FALSE(r.any_equal_boundary());
  }
}

TEST(Eta, Fig2BoundsDimension) {
  const Graph g = fixtures::fig2();
  const DistanceMatrix dm(g);
  const auto r = eta_bound(g, dm);
  ASSERT_TRUE(r.eta);
  EXPECT_GE(*r.eta, oracle::naive_dimension(g));
  EXPECT_EQ(*r.eta, 3);
}

// eta is an upper bound on Dim; when every boundary differs, Dim is at least
// floor((diam - 2) / 4); when eta is at most that floor the two coincide.
TEST(Eta, BoundsHoldExhaustivelyAndOnRandomGraphs) {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 6; ++n) {
    for (auto& g : corpus::connected_graphs(n)) graphs.push_back(std::move(g));
  }
  for (auto& g : corpus::random_corpus(60, 30)) graphs.push_back(std::move(g));
  for (int n = 3; n <= 40; n += 3) graphs.push_back(path_graph(n));
  for (const auto& g : graphs) {
    if (g.order() < 2) continue;
    const DistanceMatrix dm(g);
    const int dim = oracle::naive_dimension(g);
    const auto r = eta_bound(g, dm);
    if (r.eta) {
      ASSERT_LE(dim, *r.eta) << to_edge_list(g);
    }
    if (!r.any_equal_boundary()) {
      ASSERT_GE(dim, diameter_lower_bound(dm)) << to_edge_list(g);
    }
    if (r.eta && *r.eta <= diameter_lower_bound(dm)) {
      ASSERT_EQ(dim, *r.eta) << to_edge_list(g);
    }
  }
}

// Two long legs with a fork at each end: eta = 2 is below floor((diam-2)/4).
TEST(Eta, EqualityCaseOnDoubleFork) {
  std::vector<Edge> edges;
  const int spine = 12;
  for (Vertex v = 0; v + 1 < spine; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, spine});
  edges.push_back({0, spine + 1});
  edges.push_back({spine - 1, spine + 2});
  edges.push_back({spine - 1, spine + 3});
  const Graph g(spine + 4, edges);
  const DistanceMatrix dm(g);
  const auto r = eta_bound(g, dm);
  ASSERT_TRUE(r.eta);
  EXPECT_LE(*r.eta, diameter_lower_bound(dm));
  EXPECT_EQ(*r.eta, oracle::naive_dimension(g));
}

TEST(BoundaryLemma, OutsideVerticesAreEquidistant) {
  const Graph g = fixtures::fig1();
  const DistanceMatrix dm(g);
  EXPECT_TRUE(boundary_equidistance_holds(g, dm, 5, 6, 1));
  EXPECT_TRUE(boundary_equidistance_holds(g, dm, 0, 2, 2));
  for (const auto& h : corpus::random_corpus(50, 25)) {
    const DistanceMatrix d(h);
    const auto r = eta_bound(h, d);
    for (const auto& [m, pairs] : r.equal_boundary_pairs) {
      for (const auto& p : pairs) ASSERT_TRUE(boundary_equidistance_holds(h, d, p.first, p.second, m));
    }
  }
}

TEST(BoundaryLemma, RejectsUnequalBoundaries) {
  const Graph g = fixtures::fig1();
  const DistanceMatrix dm(g);
  try {
    boundary_equidistance_holds(g, dm, 0, 5, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotEqualBoundary);
  }
}
