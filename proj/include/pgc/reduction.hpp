#pragma once

#include <utility>
#include <vector>

#include "pgc/graph.hpp"

namespace pgc {

struct Parallelism {
  EdgeId from = kNoEdge;
  EdgeId to = kNoEdge;
  friend bool operator==(const Parallelism&, const Parallelism&) = default;
  friend auto operator<=>(const Parallelism&, const Parallelism&) = default;
};

struct SimpleView {
  PlanarMultigraph graph;
  std::vector<EdgeId> origin;     // simple edge -> lowest original edge of its group
  std::vector<EdgeId> simple_of;  // original edge -> simple edge, kNoEdge for loops
  std::vector<EdgeId> loops;
  std::vector<Parallelism> parallelisms;  // e_i -> e_1 in original ids
};

// Drops self-loops and keeps the lowest id of each parallel group. Simple edge ids follow original id order.
SimpleView simplify(const PlanarMultigraph& g);

struct DegreeReduction {
  PlanarMultigraph reduced;
  std::vector<EdgeId> cycle_edges;
  std::vector<VertexId> vertex_origin;  // reduced vertex -> original vertex
  std::vector<EdgeId> edge_origin;      // reduced edge -> original edge, kNoEdge on cycle edges
  std::vector<EdgeId> reduced_of;       // original edge -> reduced edge, kNoEdge if dropped
  std::vector<EdgeId> loops;
  std::vector<Parallelism> parallelisms;
  bool is_cycle_edge(EdgeId e) const { return edge_origin[e] == kNoEdge; }
};

// Every vertex of degree above max_degree (in the simple view) becomes a cycle following its rotation.
// The original vertex keeps its id as one cycle vertex; new vertices and cycle edges get the ids after
// the originals.
DegreeReduction reduce_degree(const PlanarMultigraph& g, std::size_t max_degree = 3);

bool semi_strict_bound_check(std::size_t n, std::size_t m);
bool semi_strict_bound_check(const PlanarMultigraph& g);

}  // namespace pgc
