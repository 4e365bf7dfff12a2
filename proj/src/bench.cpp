#include "pgc/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "pgc/applications.hpp"
#include "pgc/generators.hpp"
#include "pgc/io.hpp"
#include "pgc/oracle.hpp"

namespace pgc {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t since(Clock::time_point t0) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

std::vector<EdgeId> shuffled_edges(std::size_t m, std::uint64_t seed) {
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rand_below(rng, i)]);
  return order;
}

BenchRecord run_once(std::size_t n, Workload w, std::uint64_t seed, const ContractConfig& config) {
  BenchRecord r;
  r.n = n;
  r.workload = workload_name(w);
  Instrumentation c;
  switch (w) {
    case Workload::full_contraction: {
      const auto g = random_triangulation(n, seed);
      r.m = g.num_edges();
      ContractionStructure ds(g, config);
      r.mode = mode_name(ds.mode());
      r.memory_bytes = ds.memory_bytes();
      const auto t0 = Clock::now();
      for (EdgeId e : shuffled_edges(g.num_edges(), seed))
        if (ds.state(e) == EdgeState::live) ds.contract(e);
      r.total_ns = since(t0);
      c = ds.total_counters();
      break;
    }
    case Workload::mst: {
      auto g = random_planar(n, seed, 0.5);
      assign_random_weights(g, seed, 1000);
      r.m = g.num_edges();
      r.mode = mode_name(config.mode);
      const auto t0 = Clock::now();
      const auto res = minimum_spanning_tree(g, config);
      r.total_ns = since(t0);
      c = res.counters;
      r.mst_weight = res.weight;
      r.oracle_weight = oracle_mst(g);
      break;
    }
    case Workload::two_ec: {
      const auto g = random_planar(n, seed, 0.5);
      r.m = g.num_edges();
      r.mode = mode_name(config.mode);
      const auto t0 = Clock::now();
      Decremental2EC d(g, config);
      for (EdgeId e : shuffled_edges(g.num_edges(), seed)) d.delete_edge(e);
      r.total_ns = since(t0);
      c = d.counters();
      break;
    }
  }
  r.endpoint_updates = c.endpoint_updates;
  r.fresh_insertions = c.fresh_insertions;
  return r;
}

}  // namespace

std::string workload_name(Workload w) {
  switch (w) {
    case Workload::full_contraction: return "full-contraction";
    case Workload::mst: return "mst";
    case Workload::two_ec: return "2ec";
  }
  return "?";
}

std::optional<Workload> parse_workload(const std::string& s) {
  for (Workload w : {Workload::full_contraction, Workload::mst, Workload::two_ec})
    if (workload_name(w) == s) return w;
  return std::nullopt;
}

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
  std::vector<BenchRecord> rows;
  const std::size_t reps = std::max<std::size_t>(1, opt.repeats);
  for (std::size_t n : opt.sizes) {
    BenchRecord sum;
    for (std::size_t k = 0; k < reps; ++k) {
      const auto r = run_once(n, opt.workload, opt.seed + k, opt.config);
      sum.total_ns += r.total_ns;
      sum.endpoint_updates += r.endpoint_updates;
      sum.fresh_insertions += r.fresh_insertions;
      sum.m += r.m;
      sum.memory_bytes = std::max(sum.memory_bytes, r.memory_bytes);
      sum.n = r.n;
      sum.mode = r.mode;
      sum.workload = r.workload;
      sum.mst_weight = r.mst_weight;
      sum.oracle_weight = r.oracle_weight;
    }
    sum.total_ns /= reps;
    sum.endpoint_updates /= reps;
    sum.fresh_insertions /= reps;
    sum.m /= reps;
    if (!rows.empty() && rows.back().total_ns > 0)
      sum.ratio_prev = static_cast<double>(sum.total_ns) / static_cast<double>(rows.back().total_ns);
    rows.push_back(sum);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const BenchOptions& opt, const std::vector<BenchRecord>& rows) {
  out << "# pgc " << kVersion << " seed=" << opt.seed << " repeats=" << opt.repeats
      << " mode=" << mode_name(opt.config.mode) << " workload=" << workload_name(opt.workload) << '\n';
  out << "n,m,mode,workload,total_ns,endpoint_updates,fresh_insertions,ratio_prev\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << r.mode << ',' << r.workload << ',' << r.total_ns << ','
        << r.endpoint_updates << ',' << r.fresh_insertions << ',';
    if (r.ratio_prev) {
      std::ostringstream ss;
      ss.precision(4);
      ss << std::fixed << *r.ratio_prev;
      out << ss.str();
    }
    out << '\n';
  }
  for (const auto& r : rows)
    if (r.mst_weight)
      out << "# mst n=" << r.n << " weight=" << format_weight(*r.mst_weight)
          << " oracle=" << format_weight(*r.oracle_weight) << '\n';
}

}  // namespace pgc
