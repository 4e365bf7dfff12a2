#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgc/merge_unit.hpp"

namespace pgc {

// Shared memo of merge-sequence transitions for small units. A shape is a canonical encoding of
// (vertex count, adjacency, border); a node is the state reached from a shape's initial state by a
// sequence of merges, stored with the report of the last merge.
class MicroTable {
 public:
  static constexpr std::size_t kMaxVertices = 255;

  struct Node {
    std::vector<std::uint8_t> phi;
    std::vector<std::uint8_t> class_size;
    std::vector<std::uint64_t> alive;  // bit per shape edge
    std::uint8_t survivor = 0;
    std::uint8_t absorbed = 0;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> parallelisms;
    struct Border {
      std::uint16_t edge;
      std::uint8_t x, y;
    };
    std::vector<Border> border_edges;
  };

  struct Shape {
    std::size_t t = 0;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;  // sorted, a < b
    std::vector<char> border;
    std::uint32_t root = 0;
  };

  struct Stats {
    std::uint64_t shapes = 0;
    std::uint64_t nodes = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };

  explicit MicroTable(std::size_t max_nodes = std::size_t(1) << 22) : max_nodes_(max_nodes) {}

  std::uint32_t shape_id(std::size_t t, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& edges,
                         const std::vector<char>& border);
  const Shape& shape(std::uint32_t id) const;
  const Node& node(std::uint32_t id) const;

  // Transition from `from` by the merge `op`, or kNone.
  std::uint32_t transition(std::uint32_t from, std::uint16_t op) const;
  // Publishes a transition; returns the node id actually stored (an earlier publication wins), or
  // kNone if the table is full and `made` was not stored.
  std::uint32_t publish(std::uint32_t from, std::uint16_t op, Node made);

  Stats stats() const;
  void count(bool hit);

  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::uint32_t> shape_of_key_;
  std::deque<Shape> shapes_;
  std::deque<Node> nodes_;
  std::deque<std::vector<std::pair<std::uint16_t, std::uint32_t>>> next_;
  std::size_t max_nodes_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

class MicroUnit final : public VertexMerger {
 public:
  MicroUnit(std::shared_ptr<MicroTable> table, std::vector<VertexId> vertices, const std::vector<VertexId>& border,
            const std::vector<UnitEdge>& edges);

  std::size_t size() const override { return index_.size(); }
  bool contains(VertexId v0) const override { return index_.find(v0) != LocalIndex::kMissing; }
  VertexId phi(VertexId v0) const override;
  std::vector<VertexId> phi_inv(VertexId x) const override;
  void for_each_member(VertexId x, const std::function<void(VertexId)>& f) const override;
  std::size_t class_size(VertexId x) const override { return current().class_size[local_rep(x)]; }
  bool is_border(VertexId x) const override { return shape_->border[local_rep(x)]; }
  VertexId absorbed_of(VertexId a, VertexId b) const override;
  MergeReport merge(VertexId a, VertexId b) override;
  MergeReport insert_edge(EdgeId e, VertexId x, VertexId y) override;
  EdgeId find_edge(VertexId x, VertexId y) const override;
  const Instrumentation& counters() const override { return counters_; }
  void for_each_edge(const std::function<void(EdgeId, VertexId, VertexId)>& f) const override;

 private:
  const MicroTable::Node& current() const { return node_ != nullptr ? *node_ : *detached_; }
  std::uint8_t local_rep(VertexId x) const;
  MicroTable::Node step_shadow(std::uint8_t a, std::uint8_t b);

  std::shared_ptr<MicroTable> table_;
  LocalIndex index_;
  std::vector<EdgeId> edge_ids_;  // shape edge -> edge id
  const MicroTable::Shape* shape_ = nullptr;
  std::uint32_t node_id_ = MicroTable::kNone;
  const MicroTable::Node* node_ = nullptr;
  std::unique_ptr<MicroTable::Node> detached_;  // state once the table stopped taking entries
  std::vector<std::uint16_t> ops_;
  std::unique_ptr<MergeUnit> shadow_;
  std::size_t shadow_ops_ = 0;  // prefix of ops_ applied to shadow_
  Instrumentation counters_;
};

}  // namespace pgc
