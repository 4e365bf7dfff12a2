#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pgc/contraction.hpp"
#include "pgc/graph.hpp"

namespace pgc {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contraction by definition: endpoints are relabelled everywhere and parallel classes are re-derived
// from the adjacency of the merged vertex. Follows the same survivor and direction rules as
// ContractionStructure so that reports compare exactly.
class NaiveContractGraph {
 public:
  explicit NaiveContractGraph(const PlanarMultigraph& g, Direction direction = Direction::automatic);

  const ContractReport& init_report() const { return init_; }
  // Parallelisms and self-loops come back sorted.
  ContractReport contract(EdgeId e);

  std::pair<VertexId, VertexId> vertices(EdgeId e) const;
  std::size_t deg(VertexId u) const { return adj_.at(u).size(); }
  EdgeId edge(VertexId u, VertexId v) const;
  std::vector<std::pair<VertexId, EdgeId>> neighbors(VertexId u) const;  // sorted by neighbor
  EdgeId representative(EdgeId e) const { return rep_[e]; }
  std::vector<EdgeId> parallel_class(EdgeId e) const;  // sorted
  VertexId vertex_of(VertexId v0) const { return label_[v0]; }
  EdgeState state(EdgeId e) const { return state_[e]; }
  bool is_live_vertex(VertexId v) const { return adj_.count(v) > 0; }
  std::vector<VertexId> live_vertices() const;
  std::size_t num_simple_edges() const;

 private:
  bool key_less(EdgeId a, EdgeId b) const;

  Direction direction_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<double> weight_;
  std::vector<VertexId> label_;
  std::vector<std::size_t> size_;
  std::vector<EdgeState> state_;
  std::vector<EdgeId> rep_;
  std::map<VertexId, std::map<VertexId, std::vector<EdgeId>>> adj_;  // live non-loop edges
  ContractReport init_;
};

// Edges whose removal disconnects their component; `alive` selects a subgraph (empty = all edges).
std::vector<EdgeId> oracle_bridges(const PlanarMultigraph& g, const std::vector<char>& alive = {});

// Component id per vertex after removing bridges and dead edges.
std::vector<std::uint32_t> oracle_2ec_components(const PlanarMultigraph& g, const std::vector<char>& alive = {});

// Vertex partition into maximal k-edge-connected subgraphs by recursive minimum cuts; n <= 60.
std::vector<std::vector<VertexId>> oracle_kec(const PlanarMultigraph& g, std::size_t k);

// The perfect matching if there is exactly one, nullopt otherwise; n <= 16.
std::optional<std::vector<EdgeId>> oracle_upm(const PlanarMultigraph& g);

// Minimum spanning forest weight by sorting.
double oracle_mst(const PlanarMultigraph& g);

// Vertices on both faces of e, and faces other than those two sharing an edge with each of them, by
// tracing the faces of the subgraph of alive edges. Faces are named by the smallest dart on them.
struct FaceOracleResult {
  std::vector<VertexId> common_vertices;
  std::vector<std::uint32_t> common_faces;
  std::uint32_t left = 0, right = 0;
};
FaceOracleResult oracle_face_trace(const PlanarMultigraph& g, const std::vector<char>& alive, EdgeId e);

}  // namespace pgc
