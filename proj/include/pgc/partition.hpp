#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgc/graph.hpp"

namespace pgc {

struct Piece {
  std::vector<EdgeId> edges;       // sorted
  std::vector<VertexId> vertices;  // sorted; endpoints of the edges
  std::vector<VertexId> boundary;  // sorted; vertices shared with another piece
};

struct RDivision {
  std::vector<Piece> pieces;
  std::size_t r = 0;
  double slack = 8.0;

  std::size_t total_boundary() const;
};

struct NestedDivision {
  RDivision top;
  std::vector<RDivision> sub;  // sub[i] divides top.pieces[i]; its boundary is relative to that piece
  std::size_t r1 = 0;
  std::size_t r2 = 0;
};

// Divides the whole graph. Needs a simple embedded graph and r >= 4.
RDivision r_division(const PlanarMultigraph& g, std::size_t r, double slack = 8.0);

// Divides the subgraph formed by `edges`; boundary vertices are those shared between the new pieces.
RDivision divide_edges(const PlanarMultigraph& g, const std::vector<EdgeId>& edges, std::size_t r,
                       double slack = 8.0);

// r1 = ceil(log2(n)^4), r2 = ceil(log2(r1)^4), both clamped to at least 4, unless given explicitly.
NestedDivision nested_division(const PlanarMultigraph& g, double slack = 8.0,
                               std::optional<std::size_t> r1 = std::nullopt,
                               std::optional<std::size_t> r2 = std::nullopt);

std::size_t top_parameter(std::size_t n);
std::size_t sub_parameter(std::size_t r1);

// Empty when the division covers `edges` exactly, boundaries are right and the size bounds hold.
// max_pieces_per_vertex = 0 skips the membership cap.
std::string check_division(const PlanarMultigraph& g, const std::vector<EdgeId>& edges, const RDivision& div,
                           std::size_t max_pieces_per_vertex = 0);

void write_division(std::ostream& out, const PlanarMultigraph& g, const RDivision& div);

}  // namespace pgc
