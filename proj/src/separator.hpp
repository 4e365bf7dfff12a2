#pragma once

#include <cstdint>
#include <vector>

#include "pgc/graph.hpp"

namespace pgc::detail {

// Plane graph on local ids 0..n-1 with darts 2i, 2i+1 per edge.
struct LocalPlaneGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> tail;  // per dart
  std::vector<std::uint32_t> next;  // rotation successor per dart
  std::vector<std::uint32_t> any_dart;  // per vertex, kNoDart if isolated

  std::size_t num_edges() const { return tail.size() / 2; }
  std::uint32_t head(std::uint32_t d) const { return tail[d ^ 1u]; }
};

// The subgraph spanned by `edges`, with the rotation of g restricted to it. local_of_vertex must
// have size g.num_vertices(); it is filled for touched vertices and left for the caller to reset.
LocalPlaneGraph restrict_to(const PlanarMultigraph& g, const std::vector<EdgeId>& edges,
                            std::vector<std::uint32_t>& local_of_vertex, std::vector<VertexId>& global_of_local);

// Vertices of a fundamental cycle that splits the weight of a connected plane graph as evenly as
// the cycles of one BFS tree allow.
std::vector<std::uint32_t> cycle_separator(const LocalPlaneGraph& g, const std::vector<double>& weight);

}  // namespace pgc::detail
