#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgc/contraction.hpp"

namespace pgc {

inline constexpr const char* kVersion = "0.1.0";

enum class Workload { full_contraction, mst, two_ec };

std::string workload_name(Workload w);
std::optional<Workload> parse_workload(const std::string& s);

struct BenchOptions {
  std::vector<std::size_t> sizes;  // ascending
  Workload workload = Workload::full_contraction;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;  // seeds seed, seed+1, ...; times and counters are averaged
  ContractConfig config;
};

struct BenchRecord {
  std::size_t n = 0, m = 0;
  std::string mode;
  std::string workload;
  std::uint64_t total_ns = 0;
  std::uint64_t endpoint_updates = 0;
  std::uint64_t fresh_insertions = 0;
  std::optional<double> ratio_prev;  // total_ns / total_ns of the previous row
  std::size_t memory_bytes = 0;
  std::optional<double> mst_weight, oracle_weight;  // mst workload, last repeat
};

// Full contraction: random triangulation, contract a random maximal sequence. mst: random weighted
// planar graph. 2ec: random planar graph, delete every edge in random order.
std::vector<BenchRecord> run_bench(const BenchOptions& opt);

// `# ...` lines with version, seed, mode and workload, the header, one row per record, then a
// comment per mst row comparing its weight with the sorting oracle.
void write_bench_csv(std::ostream& out, const BenchOptions& opt, const std::vector<BenchRecord>& rows);

}  // namespace pgc
