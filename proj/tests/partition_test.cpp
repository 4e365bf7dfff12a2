#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "pgc/embedding.hpp"
#include "pgc/generators.hpp"
#include "pgc/partition.hpp"
#include "pgc/reduction.hpp"

using namespace pgc;

namespace {

std::vector<EdgeId> all_edges(const PlanarMultigraph& g) {
  std::vector<EdgeId> e(g.num_edges());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

PlanarMultigraph reduced(const PlanarMultigraph& g) { return reduce_degree(g).reduced; }

}  // namespace

TEST(RDivision, SmallGraphIsOnePiece) {
  auto g = reduced(random_triangulation(12, 1));
  auto div = r_division(g, g.num_vertices());
  ASSERT_EQ(div.pieces.size(), 1u);
  EXPECT_TRUE(div.pieces[0].boundary.empty());
  EXPECT_EQ(check_division(g, all_edges(g), div), "");
}

TEST(RDivision, Grid16) {
  auto g = reduced(grid_graph(16, 16));
  auto div = r_division(g, 64);
  EXPECT_EQ(check_division(g, all_edges(g), div, 3), "");
  EXPECT_GT(div.pieces.size(), 1u);
  for (const auto& p : div.pieces) {
    EXPECT_LE(p.vertices.size(), 8u * 64u);
    EXPECT_LE(p.boundary.size(), 8u * 8u);
  }
}

TEST(RDivision, LongPath) {
  auto g = path_graph(1000);
  auto div = r_division(g, 100);
  EXPECT_EQ(check_division(g, all_edges(g), div), "");
  EXPECT_LE(div.pieces.size(), 80u);
  for (const auto& p : div.pieces) EXPECT_LE(p.boundary.size(), 2u);
}

TEST(RDivision, Errors) {
  auto g = path_graph(10);
  EXPECT_THROW(r_division(g, 3), GraphError);
  PlanarMultigraph multi(2);
  multi.add_edge(0, 1);
  multi.add_edge(0, 1);
  EXPECT_THROW(r_division(multi, 8), GraphError);
}

TEST(RDivision, RandomTriangulationsSatisfyBounds) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = reduced(random_triangulation(200 + 150 * seed, seed));
    for (std::size_t r : {16u, 64u, 256u}) {
      auto div = r_division(g, r);
      EXPECT_EQ(check_division(g, all_edges(g), div, 3), "") << "seed " << seed << " r " << r;
      // Total boundary stays within a constant of n / sqrt(r).
      EXPECT_LE(double(div.total_boundary()), 8.0 * double(g.num_vertices()) / std::sqrt(double(r)));
    }
  }
}

TEST(RDivision, RandomPlanarAndDisconnected) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = reduced(random_planar(100 + 40 * seed, seed, 0.3));
    auto div = r_division(g, 32);
    EXPECT_EQ(check_division(g, all_edges(g), div, 3), "") << seed;
  }
  PlanarMultigraph two(6);
  for (VertexId base : {0u, 3u}) {
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, base + 2);
    two.add_edge(base + 2, base);
  }
  auto emb = reduced(*embed(two));
  auto div = r_division(emb, 4);
  EXPECT_EQ(check_division(emb, all_edges(emb), div), "");
  EXPECT_EQ(div.pieces.size(), 2u);
  for (const auto& p : div.pieces) EXPECT_TRUE(p.boundary.empty());
}

TEST(NestedDivision, DegenerateForSmallGraphs) {
  auto g = reduced(random_triangulation(16, 2));
  auto nd = nested_division(g);
  EXPECT_GE(nd.r1, g.num_vertices());
  ASSERT_EQ(nd.top.pieces.size(), 1u);
  ASSERT_EQ(nd.sub.size(), 1u);
  EXPECT_EQ(check_division(g, nd.top.pieces[0].edges, nd.sub[0]), "");
}

TEST(NestedDivision, GridHasTwoLevels) {
  auto g = reduced(grid_graph(32, 32));
  const std::size_t r1 = static_cast<std::size_t>(std::ceil(std::pow(double(g.num_vertices()), 2.0 / 3.0)));
  const std::size_t r2 = static_cast<std::size_t>(std::ceil(std::sqrt(double(r1))));
  auto nd = nested_division(g, 8.0, r1, r2);
  EXPECT_EQ(check_division(g, all_edges(g), nd.top, 3), "");
  EXPECT_GT(nd.top.pieces.size(), 1u);
  bool some_split = false;
  for (std::size_t i = 0; i < nd.top.pieces.size(); ++i) {
    EXPECT_EQ(check_division(g, nd.top.pieces[i].edges, nd.sub[i], 3), "") << i;
    some_split |= nd.sub[i].pieces.size() > 1;
  }
  EXPECT_TRUE(some_split);
}

TEST(NestedDivision, Parameters) {
  EXPECT_EQ(top_parameter(16), 256u);
  EXPECT_EQ(top_parameter(65536), 65536u);
  EXPECT_EQ(sub_parameter(256), 4096u);
  EXPECT_EQ(top_parameter(1), 4u);
}

TEST(RDivision, DumpFormat) {
  auto g = path_graph(5);
  auto div = r_division(g, 4);
  std::ostringstream out;
  write_division(out, g, div);
  EXPECT_NE(out.str().find("piece 0 edges"), std::string::npos);
}
