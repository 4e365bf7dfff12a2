#include "pgc/embedding.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace pgc {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, std::size_t>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

std::optional<PlanarMultigraph> embed(const PlanarMultigraph& g) {
  if (g.embedded()) return g;
  const std::size_t n = g.num_vertices();

  // Simple view: the lowest edge id of each parallel group stands for the group.
  std::unordered_map<std::uint64_t, EdgeId> rep_of_pair;
  std::vector<EdgeId> simple_edges;
  std::vector<std::vector<EdgeId>> extras(g.num_edges());
  std::vector<std::vector<EdgeId>> loops(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u == v) {
      loops[u].push_back(e);
      continue;
    }
    auto [it, fresh] = rep_of_pair.try_emplace(pair_key(u, v), e);
    if (fresh)
      simple_edges.push_back(e);
    else
      extras[it->second].push_back(e);
  }

  BoostGraph bg(n);
  for (std::size_t i = 0; i < simple_edges.size(); ++i) {
    auto [u, v] = g.endpoints(simple_edges[i]);
    boost::add_edge(u, v, i, bg);
  }

  std::vector<std::vector<BoostEdge>> boost_rotation(n);
  auto rotation_map = boost::make_iterator_property_map(boost_rotation.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = rotation_map))
    return std::nullopt;

  std::vector<std::vector<Dart>> rotation(n);
  for (VertexId v = 0; v < n; ++v) {
    auto& out = rotation[v];
    out.reserve(g.degree(v));
    for (const BoostEdge& be : boost_rotation[v]) {
      const EdgeId rep = simple_edges[boost::get(boost::edge_index, bg, be)];
      const bool at_first = g.endpoints(rep).first == v;
      const Dart d = at_first ? 2 * rep : 2 * rep + 1;
      // Parallel copies nest beside the representative: after it at the first endpoint, before it at the second.
      if (at_first) {
        out.push_back(d);
        for (EdgeId p : extras[rep]) out.push_back(g.endpoints(p).first == v ? 2 * p : 2 * p + 1);
      } else {
        for (auto it = extras[rep].rbegin(); it != extras[rep].rend(); ++it)
          out.push_back(g.endpoints(*it).first == v ? 2 * *it : 2 * *it + 1);
        out.push_back(d);
      }
    }
    for (EdgeId e : loops[v]) {
      out.push_back(2 * e + 1);
      out.push_back(2 * e);
    }
  }

  PlanarMultigraph result = g;
  result.set_rotation(std::move(rotation));
  if (!euler_holds(result)) throw GraphError("embedding failed the Euler check");
  return result;
}

bool is_planar(const PlanarMultigraph& g) {
  if (g.embedded()) return euler_holds(g);
  return embed(g).has_value();
}

DualCorrespondence dual(const PlanarMultigraph& g) {
  if (!g.embedded()) throw GraphError("dual needs an embedded graph");
  if (connected_components(g).count > 1) throw GraphError("dual needs a connected graph");
  return dual_of_components(g);
}

DualCorrespondence dual_of_components(const PlanarMultigraph& g) {
  if (!g.embedded()) throw GraphError("dual needs an embedded graph");
  DualCorrespondence out;
  out.primal_faces = trace_faces(g);
  const FaceSet& faces = out.primal_faces;
  PlanarMultigraph d(faces.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const VertexId a = faces.face_of_dart[2 * e];
    const VertexId b = faces.face_of_dart[2 * e + 1];
    if (g.has_weights())
      d.add_edge(a, b, g.weight(e));
    else
      d.add_edge(a, b);
  }
  std::vector<std::vector<Dart>> rotation(faces.size());
  for (std::uint32_t f = 0; f < faces.size(); ++f) rotation[f] = faces.boundary[f];
  d.set_rotation(std::move(rotation));
  if (g.has_labels()) {
    std::vector<std::int64_t> edge_labels(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) edge_labels[e] = g.edge_label(e);
    d.set_labels({}, std::move(edge_labels));
  }
  out.graph = std::move(d);
  return out;
}

FaceVertexGraph face_vertex_graph(const PlanarMultigraph& g) {
  if (!g.embedded()) throw GraphError("face-vertex graph needs an embedded graph");
  FaceVertexGraph out;
  out.num_primal_vertices = g.num_vertices();
  out.primal_faces = trace_faces(g);
  const FaceSet& faces = out.primal_faces;
  PlanarMultigraph fv(g.num_vertices() + faces.size());
  // FV edge i joins tail(d) and face(d) for primal dart d = i; its dart 2i leaves the primal vertex.
  for (Dart d = 0; d < 2 * g.num_edges(); ++d) fv.add_edge(g.tail(d), out.face_vertex(faces.face_of_dart[d]));
  std::vector<std::vector<Dart>> rotation(fv.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (Dart d : g.darts(v)) rotation[v].push_back(2 * d);
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    auto& rot = rotation[out.face_vertex(f)];
    for (auto it = faces.boundary[f].rbegin(); it != faces.boundary[f].rend(); ++it) rot.push_back(2 * *it + 1);
  }
  fv.set_rotation(std::move(rotation));
  out.kind.assign(fv.num_vertices(), FvKind::vertex);
  std::fill(out.kind.begin() + static_cast<std::ptrdiff_t>(g.num_vertices()), out.kind.end(), FvKind::face);
  out.graph = std::move(fv);
  return out;
}

}  // namespace pgc
