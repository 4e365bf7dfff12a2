#include "pgc/trace.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "pgc/generators.hpp"
#include "pgc/io.hpp"
#include "pgc/oracle.hpp"

namespace pgc {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  const auto hash = line.find('#');
  std::istringstream ss(hash == std::string::npos ? line : line.substr(0, hash));
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& tok, std::size_t line_no) {
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line_no, "bad integer '" + tok + "'");
  return x;
}

std::string join(const std::vector<EdgeId>& xs) {
  if (xs.empty()) return " -";
  std::string out;
  for (EdgeId x : xs) out += ' ' + std::to_string(x);
  return out;
}

std::string join(const std::vector<Parallelism>& ps) {
  if (ps.empty()) return " -";
  std::string out;
  for (const auto& p : ps) out += ' ' + std::to_string(p.from) + '>' + std::to_string(p.to);
  return out;
}

ContractReport sorted(ContractReport r) {
  std::sort(r.parallelisms.begin(), r.parallelisms.end());
  std::sort(r.self_loops.begin(), r.self_loops.end());
  return r;
}

std::string init_line(const ContractReport& r) {
  return "init loops" + join(r.self_loops) + " parallel" + join(r.parallelisms);
}

void check_step(const Trace& t, std::size_t k, EdgeState state) {
  const EdgeId e = t.ops[k];
  const std::size_t line = k < t.op_lines.size() ? t.op_lines[k] : 0;
  if (state == EdgeState::loop) throw TraceError(k + 1, line, "edge " + std::to_string(e) + " is a self-loop");
  if (state == EdgeState::contracted)
    throw TraceError(k + 1, line, "edge " + std::to_string(e) + " was already contracted");
}

void check_range(const Trace& t, std::size_t k) {
  if (t.ops[k] >= t.graph.num_edges())
    throw TraceError(k + 1, k < t.op_lines.size() ? t.op_lines[k] : 0, "unknown edge " + std::to_string(t.ops[k]));
}

// First difference between the structure and the oracle after a step, or "".
std::string compare(const ContractionStructure& ds, const NaiveContractGraph& o, std::size_t n, std::size_t m) {
  for (VertexId v = 0; v < n; ++v)
    if (ds.vertex_of(v) != o.vertex_of(v))
      return "vertex " + std::to_string(v) + " lies in " + std::to_string(ds.vertex_of(v)) + ", oracle says " +
             std::to_string(o.vertex_of(v));
  if (ds.num_simple_edges() != o.num_simple_edges())
    return "simple edge count " + std::to_string(ds.num_simple_edges()) + ", oracle says " +
           std::to_string(o.num_simple_edges());
  for (VertexId v : o.live_vertices())
    if (ds.deg(v) != o.deg(v))
      return "deg(" + std::to_string(v) + ") = " + std::to_string(ds.deg(v)) + ", oracle says " +
             std::to_string(o.deg(v));
  for (EdgeId e = 0; e < m; ++e) {
    if (ds.state(e) != o.state(e)) return "edge " + std::to_string(e) + " has a different state";
    if (ds.state(e) == EdgeState::contracted) continue;
    if (ds.vertices(e) != o.vertices(e)) return "vertices(" + std::to_string(e) + ") differ";
    if (ds.state(e) != EdgeState::live) continue;
    if (ds.representative(e) != o.representative(e))
      return "representative(" + std::to_string(e) + ") = " + std::to_string(ds.representative(e)) +
             ", oracle says " + std::to_string(o.representative(e));
  }
  return "";
}

}  // namespace

TraceError::TraceError(std::size_t step, std::size_t line, const std::string& what)
    : std::runtime_error("step " + std::to_string(step) + (line ? " (line " + std::to_string(line) + ")" : "") +
                         ": " + what),
      step_(step) {}

Trace read_trace(std::istream& in) {
  Trace t;
  std::string line;
  std::size_t line_no = 0, n = 0, m = 0;
  bool header = false;
  std::vector<EdgeRecord> edges;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2) throw ParseError(line_no, "expected header `n m`");
      const auto a = parse_int(tok[0], line_no), b = parse_int(tok[1], line_no);
      if (a < 0 || b < 0) throw ParseError(line_no, "negative size in header");
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      seen.assign(m, 0);
      header = true;
    } else if (edges.size() < m) {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected `u v id [weight]`");
      const auto u = parse_int(tok[0], line_no), v = parse_int(tok[1], line_no), id = parse_int(tok[2], line_no);
      if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= n)
        throw ParseError(line_no, "vertex out of range [0, " + std::to_string(n) + ")");
      if (id < 0 || static_cast<std::size_t>(id) >= m)
        throw ParseError(line_no, "edge id out of range [0, " + std::to_string(m) + ")");
      if (seen[id]) throw ParseError(line_no, "edge id " + tok[2] + " repeated");
      seen[id] = 1;
      EdgeRecord rec{u, v, id, {}};
      if (tok.size() == 4) {
        std::istringstream ws(tok[3]);
        double w;
        if (!(ws >> w) || !ws.eof()) throw ParseError(line_no, "bad weight '" + tok[3] + "'");
        rec.weight = w;
      }
      if (!edges.empty() && edges.front().weight.has_value() != rec.weight.has_value())
        throw ParseError(line_no, "either every edge has a weight or none does");
      edges.push_back(rec);
    } else {
      if (tok.size() != 2 || tok[0] != "contract") throw ParseError(line_no, "expected `contract <id>`");
      const auto e = parse_int(tok[1], line_no);
      if (e < 0) throw ParseError(line_no, "negative edge id");
      t.ops.push_back(static_cast<EdgeId>(e));
      t.op_lines.push_back(line_no);
    }
  }
  if (!header) throw ParseError(line_no, "missing header `n m`");
  if (edges.size() < m)
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  t.graph = PlanarMultigraph(n);
  std::vector<double> weights;
  for (const auto& rec : edges) {
    t.graph.add_edge(static_cast<VertexId>(rec.u), static_cast<VertexId>(rec.v));
    if (rec.weight) weights.push_back(*rec.weight);
  }
  if (!weights.empty()) t.graph.set_weights(std::move(weights));
  return t;
}

void write_trace(std::ostream& out, const Trace& t) {
  const auto& g = t.graph;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    out << u << ' ' << v << ' ' << e;
    if (g.has_weights()) out << ' ' << format_weight(g.weight(e));
    out << '\n';
  }
  for (EdgeId e : t.ops) out << "contract " << e << '\n';
}

Trace random_trace(const PlanarMultigraph& g, std::uint64_t seed) {
  Trace t;
  t.graph = g;
  t.graph.clear_rotation();
  NaiveContractGraph o(g, Direction::structural);
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rand_below(rng, i)]);
  for (EdgeId e : order)
    if (o.state(e) == EdgeState::live) {
      o.contract(e);
      t.ops.push_back(e);
    }
  return t;
}

std::string format_report_line(std::size_t step, EdgeId e, const ContractReport& r) {
  const auto s = sorted(r);
  return "step " + std::to_string(step) + " contract " + std::to_string(e) + " survivor " +
         std::to_string(s.survivor) + " parallel" + join(s.parallelisms) + " loops" + join(s.self_loops);
}

std::vector<std::string> replay(const Trace& t, ContractConfig config) {
  ContractionStructure ds(t.graph, config);
  std::vector<std::string> out{init_line(sorted(ds.init_report()))};
  for (std::size_t k = 0; k < t.ops.size(); ++k) {
    check_range(t, k);
    check_step(t, k, ds.state(t.ops[k]));
    out.push_back(format_report_line(k + 1, t.ops[k], ds.contract(t.ops[k])));
  }
  return out;
}

VerifyResult verify(const Trace& t, const std::vector<Mode>& modes, ContractConfig config) {
  const std::size_t n = t.graph.num_vertices(), m = t.graph.num_edges();
  for (Mode mode : modes) {
    VerifyResult res;
    res.mode = mode_name(mode);
    config.mode = mode;
    ContractionStructure ds(t.graph, config);
    NaiveContractGraph o(t.graph, ds.direction());
    auto fail = [&](std::size_t step, const std::string& what) {
      res.ok = false;
      res.diff = "mode " + res.mode + ", " + (step ? "step " + std::to_string(step) + " (contract " +
                                                          std::to_string(t.ops[step - 1]) + ")"
                                                    : std::string("initial report")) +
                 ": " + what;
      return res;
    };
    const auto di = sorted(ds.init_report()), oi = sorted(o.init_report());
    if (init_line(di) != init_line(oi)) return fail(0, "got `" + init_line(di) + "`, oracle `" + init_line(oi) + "`");
    if (auto d = compare(ds, o, n, m); !d.empty()) return fail(0, d);
    for (std::size_t k = 0; k < t.ops.size(); ++k) {
      check_range(t, k);
      check_step(t, k, o.state(t.ops[k]));
      const auto got = format_report_line(k + 1, t.ops[k], ds.contract(t.ops[k]));
      const auto want = format_report_line(k + 1, t.ops[k], o.contract(t.ops[k]));
      if (got != want) return fail(k + 1, "got `" + got + "`, oracle `" + want + "`");
      if (auto d = compare(ds, o, n, m); !d.empty()) return fail(k + 1, d);
    }
  }
  return {};
}

}  // namespace pgc
