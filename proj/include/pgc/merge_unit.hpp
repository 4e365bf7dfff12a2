#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "pgc/graph.hpp"
#include "pgc/pair_map.hpp"
#include "pgc/reduction.hpp"

namespace pgc {

class UnitError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BorderEdge {
  EdgeId edge = kNoEdge;
  VertexId x = kNoVertex;  // current endpoints in the reporting unit
  VertexId y = kNoVertex;
  friend bool operator==(const BorderEdge&, const BorderEdge&) = default;
  friend auto operator<=>(const BorderEdge&, const BorderEdge&) = default;
};

struct MergeReport {
  VertexId survivor = kNoVertex;
  VertexId absorbed = kNoVertex;
  std::vector<Parallelism> parallelisms;
  std::vector<BorderEdge> border_edges;
};

struct Instrumentation {
  std::uint64_t endpoint_updates = 0;   // re-pointings except border promotions
  std::uint64_t promotions = 0;         // re-pointings onto a border vertex from a non-border one
  std::uint64_t fresh_insertions = 0;   // insertions that created an edge
  std::uint64_t total_insertions = 0;
  std::uint64_t created_edges = 0;      // edges present at init plus fresh insertions
  std::uint64_t merges = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
  std::uint32_t max_edge_updates = 0;   // per-edge maximum of endpoint_updates
  std::uint64_t duplicate_insertions = 0;

  Instrumentation& operator+=(const Instrumentation& o);
};

// Common interface of the general and the table-driven unit. Vertex names are the original vertex
// ids the unit was built on; current vertices are named after their representative.
class VertexMerger {
 public:
  virtual ~VertexMerger() = default;

  virtual std::size_t size() const = 0;
  virtual bool contains(VertexId v0) const = 0;
  virtual VertexId phi(VertexId v0) const = 0;
  virtual std::vector<VertexId> phi_inv(VertexId x) const = 0;
  virtual void for_each_member(VertexId x, const std::function<void(VertexId)>& f) const = 0;
  virtual std::size_t class_size(VertexId x) const = 0;
  virtual bool is_border(VertexId x) const = 0;
  // The one of two current vertices that merge(a, b) would absorb.
  virtual VertexId absorbed_of(VertexId a, VertexId b) const = 0;
  virtual MergeReport merge(VertexId a, VertexId b) = 0;
  virtual MergeReport insert_edge(EdgeId e, VertexId x, VertexId y) = 0;
  virtual EdgeId find_edge(VertexId x, VertexId y) const = 0;  // kNoEdge if not adjacent
  virtual const Instrumentation& counters() const = 0;
  virtual void for_each_edge(const std::function<void(EdgeId, VertexId, VertexId)>& f) const = 0;
};

// Vertex name -> local index; dense table when the names are packed, sorted search otherwise.
class LocalIndex {
 public:
  LocalIndex() = default;
  explicit LocalIndex(std::vector<VertexId> sorted_names);
  std::uint32_t find(VertexId v) const;  // kMissing if absent
  VertexId name(std::uint32_t i) const { return names_[i]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<VertexId>& names() const { return names_; }
  static constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

 private:
  std::vector<VertexId> names_;
  std::vector<std::uint32_t> dense_;
  VertexId base_ = 0;
};

struct UnitEdge {
  EdgeId id = kNoEdge;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
};

class MergeUnit final : public VertexMerger {
 public:
  MergeUnit(std::vector<VertexId> vertices, const std::vector<VertexId>& border, std::vector<UnitEdge> edges);

  std::size_t size() const override { return index_.size(); }
  bool contains(VertexId v0) const override { return index_.find(v0) != LocalIndex::kMissing; }
  VertexId phi(VertexId v0) const override;
  std::vector<VertexId> phi_inv(VertexId x) const override;
  void for_each_member(VertexId x, const std::function<void(VertexId)>& f) const override;
  std::size_t class_size(VertexId x) const override { return class_size_[local_rep(x)]; }
  bool is_border(VertexId x) const override { return border_[local_rep(x)]; }
  VertexId absorbed_of(VertexId a, VertexId b) const override;
  MergeReport merge(VertexId a, VertexId b) override;
  MergeReport insert_edge(EdgeId e, VertexId x, VertexId y) override;
  EdgeId find_edge(VertexId x, VertexId y) const override;
  const Instrumentation& counters() const override { return counters_; }
  void for_each_edge(const std::function<void(EdgeId, VertexId, VertexId)>& f) const override;

  std::size_t num_edges() const { return dict_.size(); }
  // Throws UnitError on a broken invariant.
  void check_invariants() const;
  void dump(std::ostream& out) const;

 private:
  struct Record {
    std::uint32_t end[2];
    EdgeId id;
    std::uint32_t updates;
  };

  std::uint32_t local_rep(VertexId x) const;
  std::uint32_t absorbed_local(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add_record(EdgeId id, std::uint32_t a, std::uint32_t b);
  void unlink(std::uint32_t slot);
  void link(std::uint32_t slot, std::uint32_t vertex);
  void drop_record(std::uint32_t rec);

  LocalIndex index_;
  std::vector<std::uint32_t> phi_;         // local original -> local representative
  std::vector<std::uint32_t> next_member_;  // circular member lists
  std::vector<std::uint32_t> class_size_;
  std::vector<char> border_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> head_;  // first slot per vertex; slot = 2 * record + side
  std::vector<std::uint32_t> slot_prev_;
  std::vector<std::uint32_t> slot_next_;
  std::vector<Record> records_;
  std::vector<std::uint32_t> free_records_;
  PairMap dict_;
  std::unordered_set<EdgeId> inserted_;
  Instrumentation counters_;
};

}  // namespace pgc
