#pragma once

#include <optional>
#include <vector>

#include "pgc/graph.hpp"

namespace pgc {

// Computes a rotation system, or nullopt when the graph is not planar. An already embedded graph is
// returned unchanged.
std::optional<PlanarMultigraph> embed(const PlanarMultigraph& g);

bool is_planar(const PlanarMultigraph& g);

struct DualCorrespondence {
  PlanarMultigraph graph;
  // Dual edge e* has the same id as e; dual vertex f is face f of the primal face trace.
  FaceSet primal_faces;
  EdgeId dual_edge(EdgeId e) const { return e; }
};

// Requires an embedded connected graph. The dual rotation at face f follows its boundary walk.
DualCorrespondence dual(const PlanarMultigraph& g);
// Disjoint union of the duals of the components; isolated vertices contribute nothing.
DualCorrespondence dual_of_components(const PlanarMultigraph& g);

enum class FvKind : unsigned char { vertex, face };

struct FaceVertexGraph {
  PlanarMultigraph graph;
  std::vector<FvKind> kind;
  std::size_t num_primal_vertices = 0;
  FaceSet primal_faces;
  // Face f of the primal is vertex num_primal_vertices + f.
  VertexId face_vertex(std::uint32_t f) const { return static_cast<VertexId>(num_primal_vertices + f); }
};

// One edge per face-boundary occurrence, embedded; vertex ids of g are kept.
FaceVertexGraph face_vertex_graph(const PlanarMultigraph& g);

}  // namespace pgc
