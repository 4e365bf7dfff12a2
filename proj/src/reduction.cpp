#include "pgc/reduction.hpp"

#include <unordered_map>

namespace pgc {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

SimpleView simplify(const PlanarMultigraph& g) {
  SimpleView view;
  view.simple_of.assign(g.num_edges(), kNoEdge);
  view.graph = PlanarMultigraph(g.num_vertices());
  std::unordered_map<std::uint64_t, EdgeId> rep;
  rep.reserve(g.num_edges());
  std::vector<double> weights;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u == v) {
      view.loops.push_back(e);
      continue;
    }
    auto [it, fresh] = rep.try_emplace(pair_key(u, v), e);
    if (!fresh) {
      view.parallelisms.push_back({e, it->second});
      view.simple_of[e] = view.simple_of[it->second];
      continue;
    }
    view.simple_of[e] = view.graph.add_edge(u, v);
    view.origin.push_back(e);
    if (g.has_weights()) weights.push_back(g.weight(e));
  }
  view.graph.set_weights(std::move(weights));
  if (g.embedded()) {
    std::vector<std::vector<Dart>> rotation(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (Dart d : g.darts(v)) {
        const EdgeId e = edge_of(d);
        if (g.is_loop(e) || view.origin[view.simple_of[e]] != e) continue;
        rotation[v].push_back(2 * view.simple_of[e] + (d & 1u));
      }
    }
    view.graph.set_rotation(std::move(rotation));
  }
  return view;
}

DegreeReduction reduce_degree(const PlanarMultigraph& g, std::size_t max_degree) {
  if (!g.embedded()) throw GraphError("degree reduction needs an embedded graph");
  if (max_degree < 3) throw GraphError("degree bound below 3");
  SimpleView view = simplify(g);
  const PlanarMultigraph& s = view.graph;
  const std::size_t n = s.num_vertices();

  DegreeReduction out;
  out.loops = std::move(view.loops);
  out.parallelisms = std::move(view.parallelisms);
  out.vertex_origin.resize(n);
  for (VertexId v = 0; v < n; ++v) out.vertex_origin[v] = v;

  // New tail of every simple dart.
  std::vector<VertexId> tail_of(2 * s.num_edges());
  std::vector<VertexId> first_new(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = s.darts(v);
    if (rot.size() <= max_degree) {
      for (Dart d : rot) tail_of[d] = v;
      continue;
    }
    first_new[v] = static_cast<VertexId>(out.vertex_origin.size());
    tail_of[rot[0]] = v;
    for (std::size_t i = 1; i < rot.size(); ++i) {
      tail_of[rot[i]] = static_cast<VertexId>(out.vertex_origin.size());
      out.vertex_origin.push_back(v);
    }
  }

  PlanarMultigraph r(out.vertex_origin.size());
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (s.has_weights())
      r.add_edge(tail_of[2 * e], tail_of[2 * e + 1], s.weight(e));
    else
      r.add_edge(tail_of[2 * e], tail_of[2 * e + 1]);
    out.edge_origin.push_back(view.origin[e]);
  }

  std::vector<std::vector<Dart>> rotation(r.num_vertices());
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = s.darts(v);
    if (rot.size() <= max_degree) {
      rotation[v] = rot;
      continue;
    }
    const std::size_t k = rot.size();
    const auto first_cycle = static_cast<EdgeId>(r.num_edges());
    auto cycle_vertex = [&](std::size_t i) { return i == 0 ? v : static_cast<VertexId>(first_new[v] + i - 1); };
    for (std::size_t i = 0; i < k; ++i) {
      // Cycle edge i runs from c_i to c_{i+1}.
      const EdgeId c = s.has_weights() ? r.add_edge(cycle_vertex(i), cycle_vertex((i + 1) % k), 0.0)
                                       : r.add_edge(cycle_vertex(i), cycle_vertex((i + 1) % k));
      out.cycle_edges.push_back(c);
      out.edge_origin.push_back(kNoEdge);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Dart forward = 2 * (first_cycle + static_cast<EdgeId>(i));
      const Dart backward = 2 * (first_cycle + static_cast<EdgeId>((i + k - 1) % k)) + 1;
      rotation[cycle_vertex(i)] = {rot[i], forward, backward};
    }
  }
  r.set_rotation(std::move(rotation));

  out.reduced_of.assign(g.num_edges(), kNoEdge);
  for (EdgeId e = 0; e < s.num_edges(); ++e) out.reduced_of[view.origin[e]] = e;
  out.reduced = std::move(r);
  return out;
}

bool semi_strict_bound_check(std::size_t n, std::size_t m) { return n < 3 || m + 6 <= 3 * n; }

bool semi_strict_bound_check(const PlanarMultigraph& g) {
  std::unordered_map<std::uint64_t, char> seen;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u != v) seen.emplace(pair_key(u, v), 1);
  }
  return semi_strict_bound_check(g.num_vertices(), seen.size());
}

}  // namespace pgc
