#include "pgc/faces.hpp"

#include <algorithm>
#include <string>

#include "pgc/applications.hpp"

namespace pgc {

namespace {

// FV(G) with the dual edges added: FV edge d joins tail(d) to the face of d, and the dual edge of
// primal edge e gets id 2m + e. At a face vertex the dual dart crossing edge_of(d) sits just after
// the corner of d in the rotation.
PlanarMultigraph combined_graph(const PlanarMultigraph& g, const FaceSet& faces) {
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  PlanarMultigraph out(n + faces.size());
  for (Dart d = 0; d < 2 * m; ++d) out.add_edge(g.tail(d), static_cast<VertexId>(n + faces.face_of_dart[d]));
  for (EdgeId e = 0; e < m; ++e)
    out.add_edge(static_cast<VertexId>(n + faces.face_of_dart[2 * e]),
                 static_cast<VertexId>(n + faces.face_of_dart[2 * e + 1]));
  std::vector<std::vector<Dart>> rotation(out.num_vertices());
  for (VertexId v = 0; v < n; ++v)
    for (Dart d : g.darts(v)) rotation[v].push_back(2 * d);
  const auto dual_base = static_cast<Dart>(2 * (2 * m));
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    auto& rot = rotation[n + f];
    for (auto it = faces.boundary[f].rbegin(); it != faces.boundary[f].rend(); ++it) {
      rot.push_back(dual_base + *it);
      rot.push_back(2 * *it + 1);
    }
  }
  out.set_rotation(std::move(rotation));
  return out;
}

}  // namespace

FacePrimitives::FacePrimitives(const PlanarMultigraph& g, bool ordered, ContractConfig config) : ordered_(ordered) {
  if (g.embedded()) {
    g_ = g;
  } else {
    auto e = embed(g);
    if (!e) throw ApplicationError("graph is not planar");
    g_ = std::move(*e);
  }
  n_ = g_.num_vertices();
  dual_offset_ = static_cast<EdgeId>(2 * g_.num_edges());
  auto d = dual_of_components(g_);
  face_of_dart_ = d.primal_faces.face_of_dart;
  config.direction = Direction::structural;
  combined_ = std::make_unique<ContractionStructure>(combined_graph(g_, d.primal_faces), config);
  dual_ = std::make_unique<ContractionStructure>(d.graph, config);
  deleted_.assign(g_.num_edges(), 0);
}

FacePrimitives::~FacePrimitives() = default;

VertexId FacePrimitives::face_of_dart(Dart d) const { return dual_->vertex_of(face_of_dart_[d]); }

bool FacePrimitives::is_bridge(EdgeId e) const { return dual_->state(e) == EdgeState::loop; }

FacePrimitives::Result FacePrimitives::delete_edge(EdgeId e) {
  if (e >= deleted_.size()) throw ApplicationError("unknown edge " + std::to_string(e));
  if (deleted_[e]) throw ApplicationError("edge " + std::to_string(e) + " was already deleted");
  if (is_bridge(e)) throw ApplicationError("edge " + std::to_string(e) + " has the same face on both sides");

  std::vector<VertexId> walk;
  if (ordered_) {
    auto rot_next_alive = [&](Dart x) {
      do x = g_.rot_next(x);
      while (deleted_[edge_of(x)]);
      return x;
    };
    Dart x = 2 * e;
    do {
      walk.push_back(g_.tail(x));
      x = rot_next_alive(reverse(x));
    } while (x != 2 * e);
  }

  Result out;
  const auto rc = combined_->contract(dual_offset_ + e);
  for (const auto& p : rc.parallelisms) {
    if (p.from >= dual_offset_) continue;
    const auto [a, b] = combined_->vertices(p.from);
    out.common_vertices.push_back(a < n_ ? a : b);
  }
  const auto rd = dual_->contract(e);
  for (const auto& p : rd.parallelisms) {
    const auto [a, b] = dual_->vertices(p.from);
    out.common_faces.push_back(a == rd.survivor ? b : a);
  }
  deleted_[e] = 1;

  if (ordered_) {
    std::vector<VertexId> in_order;
    std::vector<char> want(n_, 0);
    for (VertexId v : out.common_vertices) want[v] = 1;
    for (VertexId v : walk)
      if (want[v]) {
        want[v] = 0;
        in_order.push_back(v);
      }
    out.common_vertices = std::move(in_order);
  } else {
    std::sort(out.common_vertices.begin(), out.common_vertices.end());
  }
  std::sort(out.common_faces.begin(), out.common_faces.end());
  return out;
}

}  // namespace pgc
