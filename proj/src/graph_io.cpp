#include "pgc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace pgc {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::int64_t parse_int(const std::string& tok, std::size_t line_no) {
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line_no, "bad integer '" + tok + "'");
  return x;
}

double parse_double(const std::string& tok, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double x = std::stod(tok, &used);
    if (used != tok.size()) throw ParseError(line_no, "bad weight '" + tok + "'");
    return x;
  } catch (const std::logic_error&) {
    throw ParseError(line_no, "bad weight '" + tok + "'");
  }
}

}  // namespace

std::string format_weight(double w) {
  if (std::floor(w) == w && std::fabs(w) < 1e15) return std::to_string(static_cast<long long>(w));
  std::ostringstream os;
  os.precision(17);
  os << w;
  return os.str();
}

std::vector<EdgeRecord> read_edge_list(std::istream& in) {
  std::vector<EdgeRecord> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected `u v id [weight]`");
    EdgeRecord rec{parse_int(tok[0], line_no), parse_int(tok[1], line_no), parse_int(tok[2], line_no), {}};
    if (tok.size() == 4) rec.weight = parse_double(tok[3], line_no);
    edges.push_back(rec);
  }
  return edges;
}

void write_edge_list(std::ostream& out, const PlanarMultigraph& g) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    out << g.vertex_label(u) << ' ' << g.vertex_label(v) << ' ' << g.edge_label(e);
    if (g.has_weights()) out << ' ' << format_weight(g.weight(e));
    out << '\n';
  }
}

void read_rotation(std::istream& in, PlanarMultigraph& g) {
  std::unordered_map<std::int64_t, VertexId> vertex_of;
  std::unordered_map<std::int64_t, EdgeId> edge_of_label;
  for (VertexId v = 0; v < g.num_vertices(); ++v) vertex_of[g.vertex_label(v)] = v;
  for (EdgeId e = 0; e < g.num_edges(); ++e) edge_of_label[g.edge_label(e)] = e;

  std::vector<std::vector<Dart>> rotation(g.num_vertices());
  std::vector<char> listed(g.num_vertices(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected `v: e1 e2 ...`");
    std::istringstream head(body.substr(0, colon));
    std::string vtok;
    head >> vtok;
    const std::int64_t vlabel = parse_int(vtok, line_no);
    auto vit = vertex_of.find(vlabel);
    if (vit == vertex_of.end()) throw ParseError(line_no, "unknown vertex " + vtok);
    const VertexId v = vit->second;
    if (listed[v]) throw ParseError(line_no, "vertex " + vtok + " listed twice");
    listed[v] = 1;
    std::istringstream rest(body.substr(colon + 1));
    for (std::string t; rest >> t;) {
      auto eit = edge_of_label.find(parse_int(t, line_no));
      if (eit == edge_of_label.end()) throw ParseError(line_no, "unknown edge " + t);
      const EdgeId e = eit->second;
      auto [a, b] = g.endpoints(e);
      Dart d;
      if (a == v && b == v) {
        const bool first_seen =
            std::find(rotation[v].begin(), rotation[v].end(), 2 * e) != rotation[v].end();
        d = first_seen ? 2 * e + 1 : 2 * e;
      } else if (a == v) {
        d = 2 * e;
      } else if (b == v) {
        d = 2 * e + 1;
      } else {
        throw ParseError(line_no, "edge " + t + " is not incident to vertex " + vtok);
      }
      rotation[v].push_back(d);
    }
  }
  try {
    g.set_rotation(std::move(rotation));
  } catch (const GraphError& err) {
    throw ParseError(line_no, err.what());
  }
}

void write_rotation(std::ostream& out, const PlanarMultigraph& g) {
  if (!g.embedded()) throw GraphError("graph is not embedded");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << g.vertex_label(v) << ':';
    for (Dart d : g.darts(v)) out << ' ' << g.edge_label(edge_of(d));
    out << '\n';
  }
}

}  // namespace pgc
