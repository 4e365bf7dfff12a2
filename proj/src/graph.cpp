#include "pgc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace pgc {

PlanarMultigraph::PlanarMultigraph(std::size_t num_vertices) : incident_(num_vertices) {}

VertexId PlanarMultigraph::add_vertex() {
  incident_.emplace_back();
  if (!vertex_label_.empty()) vertex_label_.push_back(static_cast<std::int64_t>(incident_.size() - 1));
  return static_cast<VertexId>(incident_.size() - 1);
}

void PlanarMultigraph::check_vertex(VertexId v) const {
  if (v >= incident_.size()) throw GraphError("unknown vertex " + std::to_string(v));
}

EdgeId PlanarMultigraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (has_weights()) throw GraphError("weighted graph needs a weight for every edge");
  const auto e = static_cast<EdgeId>(num_edges());
  tail_.push_back(u);
  tail_.push_back(v);
  pos_.push_back(static_cast<std::uint32_t>(incident_[u].size()));
  incident_[u].push_back(2 * e);
  pos_.push_back(static_cast<std::uint32_t>(incident_[v].size()));
  incident_[v].push_back(2 * e + 1);
  if (!edge_label_.empty()) edge_label_.push_back(e);
  embedded_ = false;
  return e;
}

EdgeId PlanarMultigraph::add_edge(VertexId u, VertexId v, double weight) {
  if (!has_weights() && num_edges() > 0) throw GraphError("unweighted graph cannot take a weighted edge");
  std::vector<double> saved;
  saved.swap(weight_);
  const EdgeId e = add_edge(u, v);
  saved.push_back(weight);
  weight_.swap(saved);
  return e;
}

double PlanarMultigraph::weight(EdgeId e) const {
  if (weight_.empty()) throw GraphError("graph has no weights");
  return weight_.at(e);
}

void PlanarMultigraph::set_weights(std::vector<double> weights) {
  if (!weights.empty() && weights.size() != num_edges()) throw GraphError("weight vector size mismatch");
  weight_ = std::move(weights);
}

void PlanarMultigraph::set_labels(std::vector<std::int64_t> vertex_labels,
                                  std::vector<std::int64_t> edge_labels) {
  if (!vertex_labels.empty() && vertex_labels.size() != num_vertices())
    throw GraphError("vertex label count mismatch");
  if (!edge_labels.empty() && edge_labels.size() != num_edges()) throw GraphError("edge label count mismatch");
  vertex_label_ = std::move(vertex_labels);
  edge_label_ = std::move(edge_labels);
}

void PlanarMultigraph::set_rotation(std::vector<std::vector<Dart>> rotation) {
  if (rotation.size() != num_vertices()) throw GraphError("rotation system has wrong vertex count");
  std::vector<char> seen(tail_.size(), 0);
  for (VertexId v = 0; v < rotation.size(); ++v) {
    if (rotation[v].size() != incident_[v].size())
      throw GraphError("rotation at vertex " + std::to_string(v) + " has wrong length");
    for (Dart d : rotation[v]) {
      if (d >= tail_.size() || tail_[d] != v || seen[d])
        throw GraphError("rotation at vertex " + std::to_string(v) + " is not a permutation of its darts");
      seen[d] = 1;
    }
  }
  incident_ = std::move(rotation);
  for (const auto& list : incident_)
    for (std::uint32_t i = 0; i < list.size(); ++i) pos_[list[i]] = i;
  embedded_ = true;
}

Dart PlanarMultigraph::rot_next(Dart d) const {
  const auto& list = incident_[tail_[d]];
  const std::uint32_t i = pos_[d] + 1;
  return list[i == list.size() ? 0 : i];
}

Dart PlanarMultigraph::rot_prev(Dart d) const {
  const auto& list = incident_[tail_[d]];
  const std::uint32_t i = pos_[d];
  return list[i == 0 ? list.size() - 1 : i - 1];
}

PlanarMultigraph build_graph(const std::vector<EdgeRecord>& edges, const std::vector<std::int64_t>& extra_vertices) {
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (edges[order[i]].id == edges[order[i - 1]].id)
      throw GraphError("duplicate edge id " + std::to_string(edges[order[i]].id));

  bool weighted = !edges.empty() && edges.front().weight.has_value();
  for (const auto& rec : edges)
    if (rec.weight.has_value() != weighted) throw GraphError("edge " + std::to_string(rec.id) + ": weights must be given for all edges or none");

  std::vector<std::int64_t> labels(extra_vertices);
  for (const auto& rec : edges) {
    labels.push_back(rec.u);
    labels.push_back(rec.v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index_of = [&](std::int64_t x) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };

  PlanarMultigraph g(labels.size());
  std::vector<std::int64_t> edge_labels;
  edge_labels.reserve(edges.size());
  for (std::size_t i : order) {
    const auto& rec = edges[i];
    if (weighted)
      g.add_edge(index_of(rec.u), index_of(rec.v), *rec.weight);
    else
      g.add_edge(index_of(rec.u), index_of(rec.v));
    edge_labels.push_back(rec.id);
  }
  g.set_labels(std::move(labels), std::move(edge_labels));
  return g;
}

FaceSet trace_faces(const PlanarMultigraph& g) {
  if (!g.embedded()) throw GraphError("face tracing needs an embedded graph");
  FaceSet faces;
  const std::size_t darts = 2 * g.num_edges();
  faces.face_of_dart.assign(darts, std::numeric_limits<std::uint32_t>::max());
  for (Dart start = 0; start < darts; ++start) {
    if (faces.face_of_dart[start] != std::numeric_limits<std::uint32_t>::max()) continue;
    const auto id = static_cast<std::uint32_t>(faces.boundary.size());
    auto& walk = faces.boundary.emplace_back();
    Dart d = start;
    do {
      faces.face_of_dart[d] = id;
      walk.push_back(d);
      d = g.face_next(d);
    } while (d != start);
  }
  return faces;
}

Components connected_components(const PlanarMultigraph& g) {
  Components c;
  c.of_vertex.assign(g.num_vertices(), std::numeric_limits<std::uint32_t>::max());
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (c.of_vertex[s] != std::numeric_limits<std::uint32_t>::max()) continue;
    const auto id = static_cast<std::uint32_t>(c.count++);
    c.of_vertex[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts(v)) {
        VertexId w = g.head(d);
        if (c.of_vertex[w] == std::numeric_limits<std::uint32_t>::max()) {
          c.of_vertex[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return c;
}

bool euler_holds(const PlanarMultigraph& g) {
  if (!g.embedded()) return false;
  const Components comps = connected_components(g);
  const FaceSet faces = trace_faces(g);
  std::vector<std::int64_t> chi(comps.count, 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    chi[comps.of_vertex[v]] += 1;
    if (g.degree(v) == 0) chi[comps.of_vertex[v]] += 1;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) chi[comps.of_vertex[g.endpoints(e).first]] -= 1;
  for (const auto& walk : faces.boundary) chi[comps.of_vertex[g.tail(walk.front())]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](std::int64_t x) { return x == 2; });
}

}  // namespace pgc
