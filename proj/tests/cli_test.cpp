#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "pgc/applications.hpp"
#include "pgc/bench.hpp"
#include "pgc/embedding.hpp"
#include "pgc/generators.hpp"
#include "pgc/io.hpp"
#include "pgc/oracle.hpp"
#include "pgc/trace.hpp"

using namespace pgc;

namespace {

std::string data(const std::string& name) { return std::string(PGC_DATA_DIR) + "/" + name; }

Trace load(const std::string& name) {
  std::ifstream in(data(name));
  return read_trace(in);
}

Trace parse(const std::string& text) {
  std::istringstream in(text);
  return read_trace(in);
}

std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Golden lines computed by the oracle alone.
std::vector<std::string> oracle_replay(const Trace& t) {
  NaiveContractGraph o(t.graph, Direction::structural);
  auto init = o.init_report();
  std::string line = "init loops";
  if (init.self_loops.empty()) line += " -";
  for (EdgeId e : init.self_loops) line += ' ' + std::to_string(e);
  line += " parallel";
  if (init.parallelisms.empty()) line += " -";
  for (auto p : init.parallelisms) line += ' ' + std::to_string(p.from) + '>' + std::to_string(p.to);
  std::vector<std::string> out{line};
  for (std::size_t k = 0; k < t.ops.size(); ++k) out.push_back(format_report_line(k + 1, t.ops[k], o.contract(t.ops[k])));
  return out;
}

int run_cli(const std::string& args, const std::string& out_file = "/dev/null") {
  const std::string cmd = std::string(PGC_CLI) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Trace, TriangleMatchesGolden) {
  const auto t = load("triangle.trace");
  const auto golden = lines_of(data("triangle.golden"));
  EXPECT_EQ(oracle_replay(t), golden);
  for (Mode m : {Mode::naive, Mode::two_level, Mode::three_level}) {
    ContractConfig cfg;
    cfg.mode = m;
    EXPECT_EQ(replay(t, cfg), golden) << mode_name(m);
  }
}

TEST(Trace, MultigraphMatchesGolden) {
  const auto t = load("k4_multi.trace");
  EXPECT_EQ(oracle_replay(t), lines_of(data("k4_multi.golden")));
  EXPECT_EQ(replay(t), lines_of(data("k4_multi.golden")));
}

TEST(Trace, SelfLoopFailsAtThatStep) {
  const auto t = load("self_loop.trace");
  try {
    replay(t);
    FAIL() << "expected a trace error";
  } catch (const TraceError& e) {
    EXPECT_EQ(e.step(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
  }
  EXPECT_THROW(verify(t, {Mode::naive}), TraceError);
}

TEST(Trace, ParseErrorsCarryTheLine) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 3\n0 1 0\n1 x 1\n2 0 2\n"), 3u);
  EXPECT_EQ(line_of("3 3\n0 1 0\n1 2 1\n2 0 2\ncontract\n"), 5u);
  EXPECT_EQ(line_of("3 3\n0 1 0\n1 2 1\n2 0 2\ncollapse 1\n"), 5u);
  EXPECT_EQ(line_of("3 2\n0 1 0\n1 3 1\n"), 3u);
  EXPECT_EQ(line_of("3 2\n0 1 0\n1 2 0\n"), 3u);
  EXPECT_EQ(line_of("3\n"), 1u);
  EXPECT_EQ(line_of("# only a comment\n"), 1u);
  EXPECT_NE(line_of("3 3\n0 1 0\n1 2 1\n"), 0u);
}

TEST(Trace, WriteReadRoundTrip) {
  auto g = random_planar_multigraph(30, 5);
  assign_random_weights(g, 5, 9);
  const auto t = random_trace(g, 5);
  std::ostringstream out;
  write_trace(out, t);
  const auto back = parse(out.str());
  EXPECT_EQ(back.ops, t.ops);
  std::ostringstream again;
  write_trace(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(Trace, RandomTracesVerifyInEveryMode) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = seed % 2 ? random_planar_multigraph(40 + 10 * seed, seed) : random_triangulation(40 + 10 * seed, seed);
    const auto t = random_trace(g, seed);
    const auto res = verify(t, {Mode::naive, Mode::two_level, Mode::three_level});
    EXPECT_TRUE(res.ok) << res.diff;
    ContractConfig naive, three;
    naive.mode = Mode::naive;
    three.mode = Mode::three_level;
    EXPECT_EQ(replay(t, naive), replay(t, three)) << "seed " << seed;
    EXPECT_EQ(replay(t, naive), oracle_replay(t)) << "seed " << seed;
  }
}

TEST(Generate, SizesAndDeterminism) {
  auto grid = grid_graph(4, 4);
  EXPECT_EQ(grid.num_vertices(), 16u);
  EXPECT_EQ(grid.num_edges(), 24u);
  auto tri = random_triangulation(100, 7);
  EXPECT_EQ(tri.num_edges(), 294u);
  tri.clear_rotation();
  EXPECT_TRUE(is_planar(tri));
  std::ostringstream a, b;
  write_edge_list(a, random_planar(200, 3));
  write_edge_list(b, random_planar(200, 3));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Bench, RowsRatiosAndSchema) {
  BenchOptions opt;
  opt.sizes = {256, 512, 1024};
  opt.config.mode = Mode::three_level;
  const auto rows = run_bench(opt);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_FALSE(rows[0].ratio_prev.has_value());
  EXPECT_TRUE(rows[1].ratio_prev.has_value());
  EXPECT_TRUE(rows[2].ratio_prev.has_value());
  for (const auto& r : rows) {
    EXPECT_EQ(r.m, 3 * r.n - 6);
    EXPECT_EQ(r.mode, "three-level");
    EXPECT_GT(r.endpoint_updates, 0u);
  }
  std::ostringstream out;
  write_bench_csv(out, opt, rows);
  std::istringstream in(out.str());
  std::size_t data_rows = 0;
  bool header = false, stamp = false;
  for (std::string l; std::getline(in, l);) {
    if (l.rfind("#", 0) == 0) {
      stamp |= l.find("seed=1") != std::string::npos && l.find("mode=three-level") != std::string::npos &&
               l.find(kVersion) != std::string::npos;
      continue;
    }
    EXPECT_EQ(std::count(l.begin(), l.end(), ','), 7) << l;
    if (!header) {
      EXPECT_EQ(l, "n,m,mode,workload,total_ns,endpoint_updates,fresh_insertions,ratio_prev");
      header = true;
    } else {
      ++data_rows;
    }
  }
  EXPECT_TRUE(stamp);
  EXPECT_EQ(data_rows, 3u);
}

TEST(Bench, MstWeightsMatchOracle) {
  BenchOptions opt;
  opt.sizes = {200, 400};
  opt.workload = Workload::mst;
  for (const auto& r : run_bench(opt)) {
    ASSERT_TRUE(r.mst_weight && r.oracle_weight);
    EXPECT_EQ(*r.mst_weight, *r.oracle_weight);
  }
}

TEST(Bench, TwoEcWorkloadRuns) {
  BenchOptions opt;
  opt.sizes = {300};
  opt.workload = Workload::two_ec;
  EXPECT_EQ(run_bench(opt).size(), 1u);
  EXPECT_TRUE(parse_workload("2ec").has_value());
  EXPECT_FALSE(parse_workload("bogus").has_value());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify " + data("triangle.trace")), 0);
  EXPECT_EQ(run_cli("verify " + data("self_loop.trace")), 2);
  EXPECT_EQ(run_cli("replay " + data("does_not_exist.trace")), 2);
  EXPECT_EQ(run_cli("--mode sideways verify " + data("triangle.trace")), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("generate grid 0"), 2);
}

TEST(Cli, ReplayWritesGolden) {
  const std::string out = ::testing::TempDir() + "pgc_replay.txt";
  ASSERT_EQ(run_cli("--mode three-level replay " + data("triangle.trace") + " --out " + out), 0);
  EXPECT_EQ(slurp(out), slurp(data("triangle.golden")));
}

TEST(Cli, GenerateIsByteIdentical) {
  const std::string a = ::testing::TempDir() + "pgc_gen_a.txt", b = ::testing::TempDir() + "pgc_gen_b.txt";
  ASSERT_EQ(run_cli("--seed 7 generate random-triangulation 100", a), 0);
  ASSERT_EQ(run_cli("--seed 7 generate random-triangulation 100", b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  std::ifstream in(a);
  EXPECT_EQ(read_edge_list(in).size(), 294u);
}

TEST(Cli, GeneratedTraceVerifies) {
  const std::string t = ::testing::TempDir() + "pgc_gen.trace";
  ASSERT_EQ(run_cli("--seed 4 generate random-planar 120 --trace", t), 0);
  EXPECT_EQ(run_cli("verify " + t), 0);
}

TEST(Cli, ApplicationsOnAFile) {
  const std::string g = ::testing::TempDir() + "pgc_app.txt", out = ::testing::TempDir() + "pgc_app_out.txt";
  ASSERT_EQ(run_cli("--seed 2 generate random-planar 40 --weights 50", g), 0);
  std::ifstream in(g);
  const auto graph = build_graph(read_edge_list(in));
  ASSERT_EQ(run_cli("mst " + g, out), 0);
  EXPECT_EQ(lines_of(out).front(), "weight " + format_weight(oracle_mst(graph)));
  ASSERT_EQ(run_cli("bridges " + g, out), 0);
  EXPECT_EQ(lines_of(out).size(), oracle_bridges(graph).size());
  for (const char* cmd : {"color5 ", "max3ec ", "upm "}) EXPECT_EQ(run_cli(cmd + g), 0) << cmd;
}
