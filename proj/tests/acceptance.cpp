#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "differential.hpp"
#include "pgc/applications.hpp"
#include "pgc/bench.hpp"
#include "pgc/embedding.hpp"
#include "pgc/faces.hpp"
#include "pgc/generators.hpp"
#include "pgc/oracle.hpp"
#include "unit_equivalence.hpp"

using namespace pgc;
using namespace pgc::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  bool informational = false;
  std::string detail;
};

int hard_failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::printf("%s %d %s: %s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
              o.informational ? " (informational)" : "");
  std::fflush(stdout);
  if (!o.pass && !o.informational) ++hard_failures;
}

std::vector<EdgeId> shuffled(std::size_t m, std::uint64_t seed) {
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  Rng rng(seed);
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rand_below(rng, i)]);
  return order;
}

// Mismatch counts of one differential run, split by criterion.
struct Audit {
  std::size_t core = 0, contracts = 0, bound = 0, steps = 0;
  std::string first_core, first_contract, first_bound;
};

void note(std::size_t& count, std::string& first, const std::string& what) {
  if (count++ == 0) first = what;
}

void audit_state(const ContractionStructure& ds, const NaiveContractGraph& o, Rng& rng, Audit& a,
                 const std::string& where) {
  const std::size_t n = ds.num_original_vertices(), m = ds.num_original_edges();
  for (VertexId v = 0; v < n; ++v)
    if (ds.vertex_of(v) != o.vertex_of(v)) {
      note(a.core, a.first_core, where + "vertex_of(" + std::to_string(v) + ")");
      return;
    }
  const auto live = o.live_vertices();
  if (ds.num_vertices() != live.size()) note(a.core, a.first_core, where + "live vertex count");

  std::size_t degree_sum = 0;
  for (VertexId u : live) {
    std::vector<std::pair<VertexId, EdgeId>> nb;
    for (auto p : ds.neighbors(u)) nb.push_back(p);
    if (nb.size() != ds.deg(u)) note(a.contracts, a.first_contract, where + "deg(" + std::to_string(u) + ")");
    for (auto [v, e] : nb)
      if (ds.edge(u, v) != e)
        note(a.contracts, a.first_contract,
             where + "edge(" + std::to_string(u) + "," + std::to_string(v) + ") disagrees with neighbors");
    std::sort(nb.begin(), nb.end());
    if (nb != o.neighbors(u)) note(a.core, a.first_core, where + "neighbors(" + std::to_string(u) + ")");
    degree_sum += nb.size();
  }
  for (int i = 0; i < 30 && !live.empty(); ++i) {
    const VertexId u = live[rand_below(rng, live.size())], v = live[rand_below(rng, live.size())];
    if (ds.edge(u, v) != o.edge(u, v))
      note(a.contracts, a.first_contract, where + "edge(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (degree_sum != 2 * ds.num_simple_edges() || ds.num_simple_edges() != o.num_simple_edges())
    note(a.core, a.first_core, where + "simple edge count");
  if (live.size() >= 3 && ds.num_simple_edges() > 3 * live.size() - 6)
    note(a.bound, a.first_bound, where + std::to_string(ds.num_simple_edges()) + " simple edges on " +
                                     std::to_string(live.size()) + " vertices");

  for (EdgeId e = 0; e < m; ++e) {
    if (ds.state(e) != o.state(e)) {
      note(a.core, a.first_core, where + "state of edge " + std::to_string(e));
      continue;
    }
    if (ds.state(e) == EdgeState::contracted) continue;
    if (ds.vertices(e) != o.vertices(e))
      note(a.contracts, a.first_contract, where + "vertices(" + std::to_string(e) + ")");
    if (ds.state(e) != EdgeState::live) continue;
    const EdgeId r = ds.representative(e);
    if (r != o.representative(e)) {
      note(a.core, a.first_core, where + "representative(" + std::to_string(e) + ")");
    } else if (r == e) {
      auto cls = ds.parallel_class(e);
      std::sort(cls.begin(), cls.end());
      if (cls != o.parallel_class(e)) note(a.core, a.first_core, where + "parallel class of " + std::to_string(e));
    }
  }
}

void audit_run(const PlanarMultigraph& g, const ContractConfig& cfg, std::uint64_t seed, Audit& a) {
  ContractionStructure ds(g, cfg);
  NaiveContractGraph o(g, ds.direction());
  Rng rng(seed);
  if (auto d = compare_reports(ds.init_report(), o.init_report()); !d.empty()) note(a.core, a.first_core, "init: " + d);
  audit_state(ds, o, rng, a, "init: ");
  for (EdgeId e : shuffled(g.num_edges(), seed * 7919 + 1)) {
    if (o.state(e) != EdgeState::live) continue;
    ++a.steps;
    const std::string where = "contract " + std::to_string(e) + ": ";
    if (auto d = compare_reports(ds.contract(e), o.contract(e)); !d.empty()) note(a.core, a.first_core, where + d);
    audit_state(ds, o, rng, a, where);
  }
}

// Criteria 1-3 share one pass over the differential corpus.
void differential_criteria() {
  const auto t0 = Clock::now();
  Audit a;
  std::size_t runs = 0, graphs = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const std::size_t n = 4 + (seed * 37) % 197;
    auto g = differential_graph(n, seed);
    if (seed % 5 == 0) assign_random_weights(g, seed, 20);
    ++graphs;
    for (Mode mode : {Mode::naive, Mode::two_level, Mode::three_level}) {
      ContractConfig cfg;
      cfg.mode = mode;
      if (seed % 7 == 0) cfg.direction = Direction::canonical;
      if (seed % 11 == 0) cfg.dictionary = Dictionary::ordered;
      try {
        audit_run(g, cfg, seed, a);
      } catch (const std::exception& ex) {
        note(a.core, a.first_core, "seed " + std::to_string(seed) + " " + mode_name(mode) + ": " + ex.what());
      }
      ++runs;
    }
  }
  const double secs = seconds_since(t0);
  auto tail = [&](std::size_t bad, const std::string& first) {
    return std::to_string(graphs) + " graphs, " + std::to_string(runs) + " runs, " + std::to_string(a.steps) +
           " steps, " + std::to_string(bad) + " mismatches" + (bad ? " (first: " + first + ")" : "");
  };
  char t[64];
  std::snprintf(t, sizeof t, ", %.1f s", secs);
  report(1, "differential correctness", {a.core == 0 && secs < 60, false, tail(a.core, a.first_core) + t});
  report(2, "interface contracts", {a.contracts == 0, false, tail(a.contracts, a.first_contract)});
  report(3, "simple-view 3n-6 bound", {a.bound == 0, false, tail(a.bound, a.first_bound)});
}

void amortization_criterion() {
  std::string detail;
  bool pass = true;
  for (std::size_t n : {std::size_t{1} << 14, std::size_t{1} << 16}) {
    const auto g = random_triangulation(n, n);
    ContractConfig cfg;
    cfg.mode = Mode::three_level;
    ContractionStructure ds(g, cfg);
    for (EdgeId e : shuffled(g.num_edges(), n + 1))
      if (ds.state(e) == EdgeState::live) ds.contract(e);
    const auto limit = 2 * static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(n)))) + 2;
    double worst_ratio = 0;
    std::uint32_t worst_updates = 0;
    std::uint64_t duplicates = 0;
    std::size_t units = 0;
    for (const auto& s : ds.unit_stats()) {
      ++units;
      const double ratio = static_cast<double>(s.counters.fresh_insertions) / std::max<std::size_t>(1, s.interesting);
      worst_ratio = std::max(worst_ratio, ratio);
      worst_updates = std::max(worst_updates, s.counters.max_edge_updates);
      duplicates += s.counters.duplicate_insertions;
    }
    const bool ok = worst_ratio <= 12.0 && worst_updates <= limit && duplicates == 0;
    pass &= ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%sn=%zu: %zu units, max f_D/|V_D|=%.2f (<=12), max edge updates=%u (<=%u), duplicates=%llu",
                  detail.empty() ? "" : "; ", n, units, worst_ratio, worst_updates, limit,
                  static_cast<unsigned long long>(duplicates));
    detail += buf;
  }
  report(4, "amortization counters", {pass, false, detail});
}

void scaling_criterion() {
  BenchOptions opt;
  opt.sizes = {std::size_t{1} << 16, std::size_t{1} << 17};
  opt.repeats = 3;
  opt.config.mode = Mode::three_level;
  const auto rows = run_bench(opt);
  const double ratio = rows.back().ratio_prev.value_or(0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "T(2^17)/T(2^16)=%.3f (<=2.6), mean of 3 seeds, %.1f ms and %.1f ms", ratio,
                rows[0].total_ns / 1e6, rows[1].total_ns / 1e6);
  report(5, "doubling ratio", {ratio <= 2.6, true, buf});
}

void mst_criterion() {
  const auto t0 = Clock::now();
  std::size_t bad = 0, total_n = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 + (seed * 997) % 4999;
    total_n += n;
    auto g = seed % 3 == 0 ? random_triangulation(std::max<std::size_t>(n, 3), seed)
                           : random_planar_multigraph(n, seed, 0.2 + 0.1 * (seed % 7), 0.1, 0.05);
    assign_random_weights(g, seed, seed % 2 ? 10 : 100000);
    const auto got = minimum_spanning_tree(g).weight;
    const auto want = oracle_mst(g);
    if (got != want && bad++ == 0) first = "seed " + std::to_string(seed);
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "200 graphs, %zu vertices, %zu weight mismatches, %.1f s (<30)", total_n, bad, secs);
  report(6, "minimum spanning tree", {bad == 0 && secs < 30, false, buf + (bad ? " first " + first : "")});
}

void coloring_criterion() {
  const auto t0 = Clock::now();
  std::size_t bad = 0, total_n = 0;
  for (std::uint64_t i = 1; i <= 100; ++i) {
    const std::size_t n = 100 * i;
    total_n += n;
    const auto g = random_triangulation(n, i);
    if (!is_proper_five_coloring(g, five_coloring(g))) ++bad;
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "100 triangulations n=100..10000, %zu vertices, %zu improper, %.1f s (<30)", total_n,
                bad, secs);
  report(7, "5-coloring", {bad == 0 && secs < 30, false, buf});
}

void two_ec_criterion() {
  std::size_t bad = 0, deletions = 0, queries = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 3 + (seed * 53) % 298;
    const auto g = seed % 2 ? random_planar_multigraph(n, seed, 0.3 + 0.05 * (seed % 10), 0.1, 0.05)
                            : random_planar(n, seed, 0.1 * (seed % 10));
    Decremental2EC d(g);
    std::vector<char> alive(g.num_edges(), 1);
    Rng rng(seed);
    for (EdgeId e : shuffled(g.num_edges(), seed)) {
      d.delete_edge(e);
      alive[e] = 0;
      ++deletions;
      if (d.bridges() != oracle_bridges(g, alive) && bad++ == 0)
        first = "seed " + std::to_string(seed) + " bridges after deleting " + std::to_string(e);
      const auto comp = oracle_2ec_components(g, alive);
      for (int q = 0; q < 20; ++q) {
        const VertexId u = rand_below(rng, n), v = rand_below(rng, n);
        ++queries;
        if (d.query(u, v) != (comp[u] == comp[v]) && bad++ == 0)
          first = "seed " + std::to_string(seed) + " query " + std::to_string(u) + "," + std::to_string(v);
      }
    }
  }
  report(8, "decremental 2-edge-connectivity",
         {bad == 0, false,
          "100 graphs, " + std::to_string(deletions) + " deletions, " + std::to_string(queries) + " queries, " +
              std::to_string(bad) + " mismatches" + (bad ? " (first: " + first + ")" : "")});
}

void kec_criterion() {
  std::size_t bad = 0, parts = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 2 + seed % 59;
    const auto g = seed % 4 == 0 ? random_triangulation(std::max<std::size_t>(n, 3), seed)
                                 : random_planar_multigraph(n, seed, 0.1 + 0.08 * (seed % 11), 0.15, 0.05);
    const auto want = oracle_kec(g, 3);
    parts += want.size();
    if (max_kec_subgraphs(g, 3) != want && bad++ == 0) first = "seed " + std::to_string(seed);
  }
  report(9, "maximal 3-edge-connected subgraphs",
         {bad == 0, false,
          "100 graphs n<=60, " + std::to_string(parts) + " parts, " + std::to_string(bad) + " mismatches" +
              (bad ? " (first: " + first + ")" : "")});
}

void upm_criterion() {
  std::size_t bad = 0, checked = 0, unique = 0;
  std::string first;
  auto check = [&](const PlanarMultigraph& g, const std::string& name) {
    ++checked;
    const auto want = oracle_upm(g);
    if (want) ++unique;
    if (unique_perfect_matching(g) != want && bad++ == 0) first = name;
  };
  // Every connected labelled graph on up to 6 vertices (all are planar below 5; K5 and its supergraphs are not).
  std::size_t exhaustive = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::pair<VertexId, VertexId>> slots;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      PlanarMultigraph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
      if (connected_components(g).count != 1 || !is_planar(g)) continue;
      ++exhaustive;
      check(g, "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  }
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const std::size_t n = 7 + seed % 4;
    check(random_planar(n, seed, 0.02 * (seed % 30)), "sample n<=10 seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 11 + seed % 6;
    check(random_planar(n, 1000 + seed, 0.01 * (seed % 40)), "random n<=16 seed " + std::to_string(seed));
  }
  report(10, "unique perfect matching",
         {bad == 0, false,
          std::to_string(checked) + " graphs (" + std::to_string(exhaustive) +
              " exhaustive n<=6, 500 sampled n=7..10, 200 random n=11..16), " + std::to_string(unique) +
              " unique, " + std::to_string(bad) + " mismatches" + (bad ? " (first: " + first + ")" : "")});
}

void micro_criterion() {
  auto table = std::make_shared<MicroTable>();
  std::size_t bad = 0, sequences = 0, random_runs = 0;
  std::string first;
  for (std::size_t t = 1; t <= 5; ++t)
    sequences += exhaustive_micro_check(t, table, [&](const std::string& d) {
      if (bad++ == 0) first = d;
    });
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    const std::size_t t = 6 + seed % 7;
    auto in = random_unit(t, seed);
    ++random_runs;
    if (auto d = replay_pair(in, random_ops(in, seed), table); !d.empty() && bad++ == 0)
      first = "seed " + std::to_string(seed) + " " + d;
  }
  report(11, "micro-unit equivalence",
         {bad == 0, false,
          std::to_string(sequences) + " exhaustive sequences t<=5, " + std::to_string(random_runs) +
              " random units t=6..12, " + std::to_string(bad) + " mismatches" + (bad ? " (first: " + first + ")" : "")});
}

void faces_criterion() {
  std::size_t bad = 0, deletions = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 3 + seed % 98;
    const auto g = seed % 3 == 0 ? random_triangulation(n, seed)
                                 : random_planar_multigraph(n, seed, 0.4 + 0.05 * (seed % 10), 0.1, 0.05);
    FacePrimitives fp(g, seed % 2 == 0);
    std::vector<char> alive(g.num_edges(), 1);
    for (EdgeId e : shuffled(g.num_edges(), seed)) {
      if (fp.is_bridge(e)) continue;
      const auto want = oracle_face_trace(fp.graph(), alive, e);
      std::vector<VertexId> faces;
      for (auto f : want.common_faces) faces.push_back(fp.face_of_dart(f));
      std::sort(faces.begin(), faces.end());
      auto got = fp.delete_edge(e);
      alive[e] = 0;
      ++deletions;
      std::sort(got.common_vertices.begin(), got.common_vertices.end());
      if ((got.common_vertices != want.common_vertices || got.common_faces != faces) && bad++ == 0)
        first = "seed " + std::to_string(seed) + " edge " + std::to_string(e);
    }
  }
  report(12, "face primitives",
         {bad == 0, false,
          "100 graphs n<=100, " + std::to_string(deletions) + " deletions, " + std::to_string(bad) + " mismatches" +
              (bad ? " (first: " + first + ")" : "")});
}

}  // namespace

int main() {
  const std::vector<std::pair<std::vector<int>, std::function<void()>>> criteria = {
      {{1, 2, 3}, differential_criteria}, {{4}, amortization_criterion}, {{5}, scaling_criterion},
      {{6}, mst_criterion},               {{7}, coloring_criterion},     {{8}, two_ec_criterion},
      {{9}, kec_criterion},               {{10}, upm_criterion},         {{11}, micro_criterion},
      {{12}, faces_criterion},
  };
  for (const auto& [ids, run] : criteria) {
    try {
      run();
    } catch (const std::exception& ex) {
      for (int id : ids) report(id, "criterion", {false, false, std::string("exception: ") + ex.what()});
    }
  }
  return hard_failures == 0 ? 0 : 1;
}
