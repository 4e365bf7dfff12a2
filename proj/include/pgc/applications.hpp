#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pgc/component_tracker.hpp"
#include "pgc/contraction.hpp"
#include "pgc/graph.hpp"

namespace pgc {

class ApplicationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MstResult {
  std::vector<EdgeId> edges;  // sorted
  double weight = 0;
  Instrumentation counters;  // of the contraction structure used
};

// Requires a connected weighted planar graph.
MstResult minimum_spanning_tree(const PlanarMultigraph& g, ContractConfig config = {});

// Colors in 1..5, indexed by vertex. Requires a planar graph without self-loops.
std::vector<int> five_coloring(const PlanarMultigraph& g, ContractConfig config = {});

// Proper and within 1..5.
bool is_proper_five_coloring(const PlanarMultigraph& g, const std::vector<int>& colors);

// 2-edge-connectivity of a planar graph under edge deletions. Bridges are the edges whose dual is a
// self-loop of the dual maintained under contraction.
class Decremental2EC {
 public:
  explicit Decremental2EC(const PlanarMultigraph& g, ContractConfig config = {});

  // Returns the edges that became bridges.
  std::vector<EdgeId> delete_edge(EdgeId e);
  bool query(VertexId u, VertexId v) const { return h_->connected(u, v); }
  bool is_bridge(EdgeId e) const { return bridge_[e] && !deleted_[e]; }
  bool is_deleted(EdgeId e) const { return deleted_[e]; }
  std::vector<EdgeId> bridges() const;  // sorted, current edges only
  std::size_t num_edges() const { return deleted_.size(); }
  Instrumentation counters() const { return dual_->total_counters(); }

 private:
  PlanarMultigraph g_;
  std::unique_ptr<ContractionStructure> dual_;
  std::unique_ptr<SearchComponentTracker> h_;  // current graph minus bridges
  std::vector<char> bridge_, deleted_;
};

// Vertex partition into the maximal k-edge-connected subgraphs, k in {2, 3}, by deleting every edge
// that lies in a cut of fewer than k edges. Parts and their members are sorted.
std::vector<std::vector<VertexId>> max_kec_subgraphs(const PlanarMultigraph& g, std::size_t k,
                                                     ContractConfig config = {});

// The perfect matching when it is unique (sorted), nullopt when there are zero or several.
std::optional<std::vector<EdgeId>> unique_perfect_matching(const PlanarMultigraph& g, ContractConfig config = {});

}  // namespace pgc
