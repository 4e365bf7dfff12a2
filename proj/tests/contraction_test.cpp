#include <gtest/gtest.h>

#include <algorithm>

#include "differential.hpp"
#include "pgc/contraction.hpp"
#include "pgc/generators.hpp"
#include "pgc/oracle.hpp"

using namespace pgc;
using pgc::testing::run_differential;

namespace {

PlanarMultigraph triangle() {
  return build_graph({{1, 2, 0}, {1, 3, 1}, {2, 3, 2}});
}

// a=12, b=23, c=34, d=41
PlanarMultigraph square() {
  return build_graph({{1, 2, 0}, {2, 3, 1}, {3, 4, 2}, {4, 1, 3}});
}

const Mode kModes[] = {Mode::naive, Mode::two_level, Mode::three_level};

}  // namespace

TEST(Contraction, TriangleInitHasNoReports) {
  ContractionStructure ds(triangle());
  EXPECT_TRUE(ds.init_report().parallelisms.empty());
  EXPECT_TRUE(ds.init_report().self_loops.empty());
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(ds.deg(v), 2u);
}

TEST(Contraction, SelfLoopReportedAtInit) {
  auto g = build_graph({{1, 2, 0}, {2, 2, 1}});
  ContractionStructure ds(g);
  EXPECT_EQ(ds.init_report().self_loops, std::vector<EdgeId>{1});
  EXPECT_EQ(ds.state(1), EdgeState::loop);
  EXPECT_EQ(ds.deg(1), 1u);
}

TEST(Contraction, InitParallelPointsAtLowerId) {
  auto g = build_graph({{1, 2, 0}, {1, 2, 1}});
  ContractionStructure ds(g);
  ASSERT_EQ(ds.init_report().parallelisms.size(), 1u);
  EXPECT_EQ(ds.init_report().parallelisms[0], (Parallelism{1, 0}));
  EXPECT_EQ(ds.representative(1), 0u);
  auto cls = ds.parallel_class(0);
  std::sort(cls.begin(), cls.end());
  EXPECT_EQ(cls, (std::vector<EdgeId>{0, 1}));
}

TEST(Contraction, TriangleSequence) {
  for (Mode mode : kModes) {
    ContractConfig cfg;
    cfg.mode = mode;
    ContractionStructure ds(triangle(), cfg);
    auto r = ds.contract(0);
    EXPECT_EQ(r.survivor, 1u);
    EXPECT_EQ(r.parallelisms, (std::vector<Parallelism>{{1, 2}}));
    EXPECT_TRUE(r.self_loops.empty());
    EXPECT_EQ(ds.edge(1, 2), 2u);
    EXPECT_EQ(ds.deg(1), 1u);
    EXPECT_EQ(ds.deg(2), 1u);
    r = ds.contract(2);
    EXPECT_TRUE(r.parallelisms.empty());
    EXPECT_EQ(r.self_loops, std::vector<EdgeId>{1});
    EXPECT_EQ(ds.num_vertices(), 1u);
    ds.check_invariants();
  }
}

TEST(Contraction, SquareSequence) {
  for (Mode mode : kModes) {
    ContractConfig cfg;
    cfg.mode = mode;
    ContractionStructure ds(square(), cfg);
    auto r = ds.contract(0);
    EXPECT_TRUE(r.parallelisms.empty());
    EXPECT_TRUE(r.self_loops.empty());
    r = ds.contract(1);
    ASSERT_EQ(r.parallelisms.size(), 1u);
    const auto p = r.parallelisms[0];
    EXPECT_TRUE((p == Parallelism{2, 3}) || (p == Parallelism{3, 2}));
    r = ds.contract(ds.representative(3));
    EXPECT_EQ(r.self_loops, std::vector<EdgeId>{p.from});
    ds.check_invariants();
  }
}

TEST(Contraction, WeightedDirectionOverridesStructure) {
  auto g = square();
  g.set_weights({5, 5, 1, 9});
  for (Mode mode : kModes) {
    ContractConfig cfg;
    cfg.mode = mode;
    ContractionStructure ds(g, cfg);
    EXPECT_EQ(ds.direction(), Direction::weighted);
    ds.contract(0);
    auto r = ds.contract(1);
    EXPECT_EQ(r.parallelisms, (std::vector<Parallelism>{{3, 2}}));
    EXPECT_EQ(ds.min_weight_in_class(3), 2u);
    EXPECT_EQ(ds.representative(3), 2u);
  }
}

TEST(Contraction, MinWeightOfClass) {
  auto g = build_graph({{1, 2, 0, 5.0}, {1, 2, 1, 2.0}, {2, 3, 2, 4.0}});
  ContractionStructure ds(g);
  EXPECT_EQ(ds.min_weight_in_class(0), 1u);
  EXPECT_EQ(ds.min_weight_in_class(2), 2u);
  ContractConfig cfg;
  cfg.direction = Direction::canonical;
  ContractionStructure canon(g, cfg);
  EXPECT_EQ(canon.representative(1), 0u);
  EXPECT_EQ(canon.min_weight_in_class(0), 1u);
  EXPECT_THROW(ContractionStructure(triangle()).min_weight_in_class(0), ContractError);
}

TEST(Contraction, SingleEdgeQueries) {
  auto g = build_graph({{1, 2, 0}});
  ContractionStructure ds(g);
  EXPECT_EQ(ds.deg(0), 1u);
  EXPECT_EQ(ds.edge(0, 1), 0u);
  EXPECT_EQ(ds.vertices(0), (std::pair<VertexId, VertexId>{0, 1}));
  EXPECT_EQ(ds.representative(0), 0u);
  auto path = path_graph(3);
  ContractionStructure p(path);
  EXPECT_EQ(p.edge(0, 2), kNoEdge);
}

TEST(Contraction, K4GroupsThreeEdges) {
  for (Mode mode : kModes) {
    ContractConfig cfg;
    cfg.mode = mode;
    auto g = complete_graph(4);
    ContractionStructure ds(g, cfg);
    NaiveContractGraph o(g);
    ds.contract(0);
    o.contract(0);
    EdgeId next = kNoEdge;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (ds.state(e) == EdgeState::live) {
        next = e;
        break;
      }
    ds.contract(next);
    o.contract(next);
    std::size_t largest = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (ds.state(e) == EdgeState::live) largest = std::max(largest, ds.parallel_class(e).size());
    EXPECT_EQ(largest, 3u);
    Rng rng(1);
    EXPECT_EQ(pgc::testing::compare_state(ds, o, rng), "");
  }
}

TEST(Contraction, ErrorsOnDeadEdges) {
  ContractionStructure ds(triangle());
  ds.contract(0);
  EXPECT_THROW(ds.contract(0), ContractError);
  ds.contract(2);
  EXPECT_THROW(ds.contract(1), ContractError);
  EXPECT_THROW(ds.contract(7), ContractError);
  EXPECT_THROW(ds.deg(0), ContractError);
}

TEST(Contraction, RejectsNonPlanar) {
  EXPECT_THROW(ContractionStructure(complete_graph(5)), ContractError);
}

TEST(Contraction, AutoModeIsNaiveOnSmallInputs) {
  ContractionStructure ds(random_triangulation(200, 3));
  EXPECT_EQ(ds.mode(), Mode::naive);
}

TEST(Contraction, ThreeLevelHasThreeLevels) {
  ContractConfig cfg;
  cfg.mode = Mode::three_level;
  ContractionStructure ds(grid_graph(32, 32), cfg);
  std::uint32_t deepest = 0;
  for (const auto& s : ds.unit_stats()) deepest = std::max(deepest, s.level);
  EXPECT_EQ(deepest, 2u);
  ds.check_invariants();
}

TEST(Contraction, DisconnectedInput) {
  auto g = build_graph({{1, 2, 0}, {2, 3, 1}, {3, 1, 2}, {4, 5, 3}}, {6});
  for (Mode mode : kModes) {
    ContractConfig cfg;
    cfg.mode = mode;
    EXPECT_EQ(run_differential(g, cfg, 5, true), "");
  }
}

class ContractionDifferential : public ::testing::TestWithParam<Mode> {};

TEST_P(ContractionDifferential, RandomGraphsMatchOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 4 + seed * 37 % 120;
    auto g = pgc::testing::differential_graph(n, seed);
    ContractConfig cfg;
    cfg.mode = GetParam();
    cfg.r1 = 16 + seed % 20;
    cfg.r2 = 4 + seed % 5;
    ASSERT_EQ(run_differential(g, cfg, seed, true), "") << "seed " << seed << " n " << n;
  }
}

TEST_P(ContractionDifferential, WeightedAndCanonicalDirections) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = pgc::testing::differential_graph(30 + seed * 7, seed);
    assign_random_weights(g, seed, 20);
    ContractConfig cfg;
    cfg.mode = GetParam();
    ASSERT_EQ(run_differential(g, cfg, seed, true), "") << "seed " << seed;
    cfg.direction = Direction::canonical;
    ASSERT_EQ(run_differential(g, cfg, seed, true), "") << "canonical seed " << seed;
  }
}

TEST_P(ContractionDifferential, OrderedDictionaryMatches) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = pgc::testing::differential_graph(80, seed);
    ContractConfig cfg;
    cfg.mode = GetParam();
    cfg.dictionary = Dictionary::ordered;
    ASSERT_EQ(run_differential(g, cfg, seed), "") << "seed " << seed;
  }
}

TEST_P(ContractionDifferential, WithoutMicroUnits) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = pgc::testing::differential_graph(90, seed);
    ContractConfig cfg;
    cfg.mode = GetParam();
    cfg.micro_threshold = 0;
    ASSERT_EQ(run_differential(g, cfg, seed, true), "") << "seed " << seed;
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, ContractionDifferential,
                         ::testing::Values(Mode::naive, Mode::two_level, Mode::three_level),
                         [](const auto& info) {
                           auto s = mode_name(info.param);
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });
