#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgc/contraction.hpp"
#include "pgc/graph.hpp"

namespace pgc {

// Header `n m`, then m lines `u v id [weight]` with vertices in [0, n) and ids a permutation of
// [0, m), then one `contract <id>` per line. `#` starts a comment.
struct Trace {
  PlanarMultigraph graph;
  std::vector<EdgeId> ops;
  std::vector<std::size_t> op_lines;  // source line of each op, 0 when built in memory
};

// A contraction the trace asks for but the graph does not allow.
class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t step, std::size_t line, const std::string& what);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

Trace read_trace(std::istream& in);  // throws ParseError
void write_trace(std::ostream& out, const Trace& t);

// A random maximal contraction sequence over g.
Trace random_trace(const PlanarMultigraph& g, std::uint64_t seed);

// One line for the initial report, then one per step:
//   init loops <ids> parallel <from>><to> ...
//   step <k> contract <e> survivor <v> parallel <from>><to> ... loops <ids>
// with parallelisms and loops sorted. Throws TraceError on an illegal step.
std::vector<std::string> replay(const Trace& t, ContractConfig config = {});

struct VerifyResult {
  bool ok = true;
  std::string mode;
  std::string diff;  // first divergence with the step that produced it
};

// Runs each mode against NaiveContractGraph, comparing reports and the live partition after every
// step. Stops at the first divergence.
VerifyResult verify(const Trace& t, const std::vector<Mode>& modes, ContractConfig config = {});

std::string format_report_line(std::size_t step, EdgeId e, const ContractReport& r);

}  // namespace pgc
