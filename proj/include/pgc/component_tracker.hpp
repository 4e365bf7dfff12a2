#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pgc/graph.hpp"

namespace pgc {

// Connectivity of a graph under edge deletions.
class ComponentTracker {
 public:
  virtual ~ComponentTracker() = default;
  virtual void delete_edge(EdgeId e) = 0;
  virtual bool contains(EdgeId e) const = 0;
  virtual bool connected(VertexId u, VertexId v) const = 0;
  virtual std::uint32_t component(VertexId v) const = 0;
  virtual std::size_t component_size(VertexId v) const = 0;
};

// Deleting uv searches from u and v in lockstep and relabels the side found to be complete first, so
// each deletion costs O(size of the smaller side).
class SearchComponentTracker final : public ComponentTracker {
 public:
  // `present` selects the initial edges; empty means all.
  explicit SearchComponentTracker(const PlanarMultigraph& g, const std::vector<char>& present = {});

  void delete_edge(EdgeId e) override;
  bool contains(EdgeId e) const override { return present_[e]; }
  bool connected(VertexId u, VertexId v) const override { return comp_[u] == comp_[v]; }
  std::uint32_t component(VertexId v) const override { return comp_[v]; }
  std::size_t component_size(VertexId v) const override { return size_[comp_[v]]; }

 private:
  struct Search {
    std::vector<VertexId> seen;
    std::size_t head = 0;
    std::size_t dart = 0;
    bool done = false;
  };
  bool advance(Search& s, std::uint32_t stamp, std::uint32_t other, bool& met);

  const PlanarMultigraph* g_;
  std::vector<char> present_;
  std::vector<std::uint32_t> comp_;
  std::vector<std::size_t> size_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace pgc
