#include <gtest/gtest.h>

#include <numeric>

#include "pgc/embedding.hpp"
#include "pgc/generators.hpp"
#include "pgc/oracle.hpp"

using namespace pgc;

TEST(Oracle, TriangleContractGivesOneParallelism) {
  NaiveContractGraph o(cycle_graph(3));
  auto r = o.contract(0);
  EXPECT_EQ(r.parallelisms.size(), 1u);
  EXPECT_TRUE(r.self_loops.empty());
  EXPECT_EQ(o.num_simple_edges(), 1u);
}

TEST(Oracle, ParallelEdgesBecomeLoops) {
  auto g = build_graph({{1, 2, 0}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {2, 3, 4}});
  NaiveContractGraph o(g);
  EXPECT_EQ(o.init_report().parallelisms.size(), 3u);
  auto r = o.contract(2);
  EXPECT_EQ(r.self_loops, (std::vector<EdgeId>{0, 1, 3}));
  EXPECT_EQ(o.state(2), EdgeState::contracted);
  EXPECT_EQ(o.vertex_of(0), o.vertex_of(1));
}

TEST(Oracle, FullContractionLeavesOneVertexPerComponent) {
  auto g = random_planar(50, 4);
  NaiveContractGraph o(g);
  std::size_t loops = o.init_report().self_loops.size(), contracted = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (o.state(e) != EdgeState::live) continue;
    loops += o.contract(e).self_loops.size();
    ++contracted;
  }
  EXPECT_EQ(o.live_vertices().size(), 1u);
  EXPECT_EQ(contracted, 49u);
  EXPECT_EQ(loops + contracted, g.num_edges());
}

TEST(Oracle, PathEdgesAreBridges) {
  auto g = path_graph(6);
  std::vector<EdgeId> all(5);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(oracle_bridges(g), all);
  EXPECT_TRUE(oracle_bridges(cycle_graph(5)).empty());
}

TEST(Oracle, ParallelPairIsNotABridge) {
  auto g = build_graph({{1, 2, 0}, {1, 2, 1}, {2, 3, 2}});
  EXPECT_EQ(oracle_bridges(g), std::vector<EdgeId>{2});
  EXPECT_EQ(oracle_bridges(g, {1, 0, 1}), (std::vector<EdgeId>{0, 2}));
}

TEST(Oracle, TwoTrianglesSharingAVertex) {
  auto g = build_graph({{1, 2, 0}, {2, 3, 1}, {3, 1, 2}, {3, 4, 3}, {4, 5, 4}, {5, 3, 5}});
  auto c = oracle_2ec_components(g);
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[2], c[3]);
  EXPECT_EQ(c[0], c[2]);
  EXPECT_TRUE(oracle_bridges(g).empty());
}

TEST(Oracle, K4IsThreeEdgeConnected) {
  auto parts = oracle_kec(complete_graph(4), 3);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].size(), 4u);
  EXPECT_EQ(oracle_kec(complete_graph(4), 4).size(), 4u);
}

TEST(Oracle, TwoK4sJoinedByTwoPaths) {
  std::vector<EdgeRecord> e;
  std::int64_t id = 0;
  for (int base : {0, 4})
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) e.push_back({base + a, base + b, id++});
  e.push_back({0, 8, id++});
  e.push_back({8, 4, id++});
  e.push_back({1, 9, id++});
  e.push_back({9, 5, id++});
  auto parts = oracle_kec(build_graph(e), 3);
  std::vector<std::vector<VertexId>> expect{{0, 1, 2, 3}, {4, 5, 6, 7}, {8}, {9}};
  EXPECT_EQ(parts, expect);
}

TEST(Oracle, UniqueMatchingByEnumeration) {
  auto k2 = path_graph(2);
  EXPECT_EQ(oracle_upm(k2), std::optional<std::vector<EdgeId>>(std::vector<EdgeId>{0}));
  EXPECT_EQ(oracle_upm(path_graph(4)), std::optional<std::vector<EdgeId>>(std::vector<EdgeId>{0, 2}));
  EXPECT_FALSE(oracle_upm(cycle_graph(4)).has_value());
  EXPECT_FALSE(oracle_upm(path_graph(3)).has_value());
  EXPECT_THROW(oracle_upm(path_graph(18)), OracleError);
}

TEST(Oracle, KruskalWeight) {
  auto g = build_graph({{1, 2, 0, 1.0}, {1, 3, 1, 2.0}, {2, 3, 2, 3.0}});
  EXPECT_EQ(oracle_mst(g), 3.0);
}

TEST(Oracle, FaceTraceOfSquareWithDiagonal) {
  auto g = embed(build_graph({{1, 2, 0}, {2, 3, 1}, {3, 4, 2}, {4, 1, 3}, {1, 3, 4}}));
  ASSERT_TRUE(g);
  auto r = oracle_face_trace(*g, {}, 4);
  EXPECT_EQ(r.common_vertices, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(r.common_faces.size(), 1u);
  EXPECT_NE(r.left, r.right);
  EXPECT_THROW(oracle_face_trace(*g, {1, 1, 1, 0, 1}, 2), OracleError);
}
