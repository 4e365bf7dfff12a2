#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
// Edge e owns darts 2e (leaving its first endpoint) and 2e+1 (leaving its second).
using Dart = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr Dart kNoDart = std::numeric_limits<Dart>::max();

inline EdgeId edge_of(Dart d) { return d >> 1; }
inline Dart reverse(Dart d) { return d ^ 1u; }
inline Dart first_dart(EdgeId e) { return e << 1; }

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PlanarMultigraph {
 public:
  PlanarMultigraph() = default;
  explicit PlanarMultigraph(std::size_t num_vertices);

  VertexId add_vertex();
  EdgeId add_edge(VertexId u, VertexId v);
  EdgeId add_edge(VertexId u, VertexId v, double weight);

  std::size_t num_vertices() const { return incident_.size(); }
  std::size_t num_edges() const { return tail_.size() / 2; }

  VertexId tail(Dart d) const { return tail_[d]; }
  VertexId head(Dart d) const { return tail_[reverse(d)]; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return {tail_[2 * e], tail_[2 * e + 1]};
  }
  VertexId other(EdgeId e, VertexId v) const {
    return tail_[2 * e] == v ? tail_[2 * e + 1] : tail_[2 * e];
  }
  bool is_loop(EdgeId e) const { return tail_[2 * e] == tail_[2 * e + 1]; }

  // Darts leaving v; in rotation order when the graph is embedded. A self-loop contributes both darts.
  const std::vector<Dart>& darts(VertexId v) const { return incident_[v]; }
  std::size_t degree(VertexId v) const { return incident_[v].size(); }

  bool has_weights() const { return !weight_.empty(); }
  double weight(EdgeId e) const;
  void set_weights(std::vector<double> weights);
  const std::vector<double>& weights() const { return weight_; }

  bool embedded() const { return embedded_; }
  // rotation[v] lists every dart leaving v exactly once, in cyclic order.
  void set_rotation(std::vector<std::vector<Dart>> rotation);
  void clear_rotation() { embedded_ = false; }
  Dart rot_next(Dart d) const;
  Dart rot_prev(Dart d) const;
  // Successor of d along its face boundary walk.
  Dart face_next(Dart d) const { return rot_next(reverse(d)); }

  std::int64_t vertex_label(VertexId v) const {
    return vertex_label_.empty() ? static_cast<std::int64_t>(v) : vertex_label_[v];
  }
  std::int64_t edge_label(EdgeId e) const {
    return edge_label_.empty() ? static_cast<std::int64_t>(e) : edge_label_[e];
  }
  void set_labels(std::vector<std::int64_t> vertex_labels, std::vector<std::int64_t> edge_labels);
  bool has_labels() const { return !vertex_label_.empty() || !edge_label_.empty(); }

 private:
  void check_vertex(VertexId v) const;

  std::vector<VertexId> tail_;
  std::vector<std::vector<Dart>> incident_;
  std::vector<std::uint32_t> pos_;
  std::vector<double> weight_;
  std::vector<std::int64_t> vertex_label_;
  std::vector<std::int64_t> edge_label_;
  bool embedded_ = false;
};

struct EdgeRecord {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t id = 0;
  std::optional<double> weight;
};

// Dense ids follow the sorted order of the external labels, so label order and id order agree.
PlanarMultigraph build_graph(const std::vector<EdgeRecord>& edges,
                             const std::vector<std::int64_t>& extra_vertices = {});

struct FaceSet {
  std::vector<std::uint32_t> face_of_dart;
  // Boundary walks; faces are numbered by their smallest dart.
  std::vector<std::vector<Dart>> boundary;
  std::size_t size() const { return boundary.size(); }
};

FaceSet trace_faces(const PlanarMultigraph& g);

struct Components {
  std::vector<std::uint32_t> of_vertex;
  std::size_t count = 0;
};

Components connected_components(const PlanarMultigraph& g);

// v - e + f = 2 for every component, counting an isolated vertex as having one face.
bool euler_holds(const PlanarMultigraph& g);

}  // namespace pgc
