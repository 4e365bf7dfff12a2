#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgc/graph.hpp"
#include "pgc/merge_unit.hpp"
#include "pgc/micro_unit.hpp"
#include "pgc/pair_map.hpp"
#include "pgc/reduction.hpp"

namespace pgc {

class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Mode { automatic, naive, two_level, three_level };

// Direction of reported parallelisms. structural: the class on the absorbed vertex's side points at
// the survivor's side. canonical: towards the lower edge id. weighted: towards the lower (weight, id).
// automatic picks weighted when the graph carries weights and structural otherwise.
enum class Direction { automatic, structural, canonical, weighted };

enum class Dictionary { hashed, ordered };

enum class EdgeState : unsigned char { live, loop, contracted };

std::string mode_name(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

struct ContractConfig {
  Mode mode = Mode::automatic;
  std::optional<std::size_t> r1;
  std::optional<std::size_t> r2;
  double slack = 8.0;
  std::size_t micro_threshold = 128;
  Dictionary dictionary = Dictionary::hashed;
  Direction direction = Direction::automatic;
  std::shared_ptr<MicroTable> micro_table;  // shared between structures when set
};

struct ContractReport {
  VertexId survivor = kNoVertex;
  std::vector<Parallelism> parallelisms;
  std::vector<EdgeId> self_loops;
};

struct UnitStats {
  std::uint32_t level = 0;
  std::size_t interesting = 0;  // |V_D|
  std::size_t border = 0;       // |AV_D|
  bool micro = false;
  Instrumentation counters;
};

// Maintains a planar multigraph under edge contractions. Vertices and edges keep the ids of the
// input graph; a contraction names the merged vertex after one of its endpoints.
class ContractionStructure {
 public:
  explicit ContractionStructure(const PlanarMultigraph& g0, ContractConfig config = {});
  ~ContractionStructure();
  ContractionStructure(const ContractionStructure&) = delete;
  ContractionStructure& operator=(const ContractionStructure&) = delete;

  // Self-loops and parallelisms of the input, reported once at construction.
  const ContractReport& init_report() const { return init_report_; }

  ContractReport contract(EdgeId e);

  std::pair<VertexId, VertexId> vertices(EdgeId e) const;
  std::size_t deg(VertexId u) const;
  EdgeId edge(VertexId u, VertexId v) const;  // kNoEdge when not adjacent

  class NeighborIterator {
   public:
    using value_type = std::pair<VertexId, EdgeId>;
    NeighborIterator(const ContractionStructure* ds, VertexId u, std::uint32_t slot) : ds_(ds), u_(u), slot_(slot) {}
    value_type operator*() const;
    NeighborIterator& operator++();
    bool operator==(const NeighborIterator& o) const { return slot_ == o.slot_; }

   private:
    const ContractionStructure* ds_;
    VertexId u_;
    std::uint32_t slot_;
  };
  struct NeighborRange {
    NeighborIterator b, e;
    NeighborIterator begin() const { return b; }
    NeighborIterator end() const { return e; }
  };
  // Invalidated by the next contract.
  NeighborRange neighbors(VertexId u) const;

  EdgeId representative(EdgeId e) const;
  std::vector<EdgeId> parallel_class(EdgeId e) const;  // preorder of the parallelism forest
  EdgeId min_weight_in_class(EdgeId e) const;

  // Current vertex containing the original vertex v0.
  VertexId vertex_of(VertexId v0) const;
  EdgeState state(EdgeId e) const { return edge_state_[e]; }
  bool is_live_vertex(VertexId v) const { return v < vertex_alive_.size() && vertex_alive_[v]; }
  std::size_t num_vertices() const { return live_vertices_; }
  std::size_t num_simple_edges() const { return simple_edges_; }
  std::size_t num_original_vertices() const { return vertex_alive_.size(); }
  std::size_t num_original_edges() const { return edge_state_.size(); }

  Mode mode() const { return mode_; }
  Direction direction() const { return direction_; }
  std::size_t r1() const { return r1_; }
  std::size_t r2() const { return r2_; }
  std::size_t internal_vertices() const { return leaf_of_.size(); }
  std::vector<UnitStats> unit_stats() const;
  Instrumentation total_counters() const;
  std::size_t memory_bytes() const;

  // Recomputes every maintained invariant; throws ContractError naming the first violation.
  void check_invariants() const;

 private:
  struct Node;
  struct Event {
    EdgeId from, to;  // internal edges
    bool from_first;  // whether `from` lay on the side of the first merged vertex
  };
  struct Place {
    std::uint32_t node;
    VertexId x;
  };

  void build_units(const PlanarMultigraph& h, const ContractConfig& config);
  Place resolve(VertexId v0) const;
  VertexId translate_down(std::uint32_t from, VertexId x, std::uint32_t to) const;
  EdgeId internal_edge(VertexId x, VertexId y) const;
  void merge_internal(VertexId a0, VertexId b0);
  void merge_in(std::uint32_t node, VertexId x_first, VertexId x_second);
  void insert_up(std::uint32_t node, EdgeId e, VertexId x, VertexId y, bool from_first);
  VertexId beta(std::uint32_t node, VertexId x) const;

  EdgeId find_class(EdgeId e) const;
  bool key_less(EdgeId a, EdgeId b) const;
  void join_classes(EdgeId child_rep, EdgeId root_rep, EdgeId internal_rep);
  void list_unlink(std::uint32_t slot);
  void list_push(std::uint32_t slot, VertexId v);
  void list_splice(VertexId into, VertexId from);
  void check_live_edge(EdgeId e) const;
  void check_live_vertex(VertexId v) const;

  Mode mode_ = Mode::naive;
  Direction direction_ = Direction::structural;
  std::size_t r1_ = 0, r2_ = 0;
  std::shared_ptr<MicroTable> table_;
  Dictionary dictionary_ = Dictionary::hashed;

  // Public side, indexed by original ids.
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<double> weight_;
  std::vector<EdgeState> edge_state_;
  std::vector<EdgeId> forest_parent_, first_child_, next_sibling_;
  mutable std::vector<EdgeId> dsu_;
  std::vector<std::uint32_t> dsu_size_;
  std::vector<EdgeId> class_rep_;       // by class root: public representative
  std::vector<EdgeId> class_internal_;  // by class root: internal edge holding the class
  std::vector<char> vertex_alive_;
  std::vector<std::uint32_t> vertex_size_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> list_next_, list_prev_;  // slots 2e, 2e+1, then one sentinel per vertex
  std::size_t live_vertices_ = 0;
  std::size_t simple_edges_ = 0;
  ContractReport init_report_;

  // Internal side: vertices and edges of the reduced graph.
  std::vector<std::pair<VertexId, VertexId>> h_ends_;
  std::vector<EdgeId> public_of_h_;  // kNoEdge for cycle edges
  std::vector<VertexId> public_of_internal_;
  std::vector<VertexId> internal_of_public_;
  std::vector<std::uint32_t> leaf_of_;  // some leaf node holding the vertex, or kNone
  std::vector<std::uint32_t> home_of_;  // node whose non-border labels include the vertex
  std::vector<std::unique_ptr<Node>> nodes_;
  std::vector<Event> events_;
  bool initializing_ = false;
};

}  // namespace pgc
