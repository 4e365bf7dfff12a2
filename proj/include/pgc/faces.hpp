#pragma once

#include <memory>
#include <vector>

#include "pgc/contraction.hpp"
#include "pgc/embedding.hpp"

namespace pgc {

// Deletes edges of an embedded planar graph and reports, for each deletion, what the two faces on
// either side of the edge had in common just before it. Faces are named by the labels of the dual
// structure; face_of_dart maps a dart to the label of the face currently containing it.
class FacePrimitives {
 public:
  // `ordered` lists common vertices in the order of a walk along the left face.
  explicit FacePrimitives(const PlanarMultigraph& g, bool ordered = false, ContractConfig config = {});
  ~FacePrimitives();

  struct Result {
    std::vector<VertexId> common_vertices;  // C(f_l) ∩ C(f_r)
    std::vector<VertexId> common_faces;     // faces other than f_l, f_r adjacent to both
  };
  // Throws ApplicationError when e is deleted or a bridge.
  Result delete_edge(EdgeId e);

  VertexId face_of_dart(Dart d) const;
  bool is_deleted(EdgeId e) const { return deleted_[e]; }
  bool is_bridge(EdgeId e) const;
  const PlanarMultigraph& graph() const { return g_; }

 private:
  PlanarMultigraph g_;
  bool ordered_;
  std::size_t n_ = 0;
  EdgeId dual_offset_ = 0;  // id of the dual edge of primal edge 0 in the combined structure
  std::vector<std::uint32_t> face_of_dart_;
  std::unique_ptr<ContractionStructure> combined_;  // FV(G) ∪ G*
  std::unique_ptr<ContractionStructure> dual_;
  std::vector<char> deleted_;
};

}  // namespace pgc
