#include <algorithm>
#include <deque>
#include <string>

#include "pgc/applications.hpp"
#include "pgc/embedding.hpp"

namespace pgc {

namespace {

PlanarMultigraph embedded_copy(const PlanarMultigraph& g) {
  auto e = embed(g);
  if (!e) throw ApplicationError("graph is not planar");
  return std::move(*e);
}

}  // namespace

Decremental2EC::Decremental2EC(const PlanarMultigraph& g, ContractConfig config) : g_(embedded_copy(g)) {
  const std::size_t m = g_.num_edges();
  auto d = dual_of_components(g_);
  dual_ = std::make_unique<ContractionStructure>(d.graph, config);
  bridge_.assign(m, 0);
  deleted_.assign(m, 0);
  std::vector<char> present(m, 1);
  for (EdgeId e : dual_->init_report().self_loops) {
    bridge_[e] = 1;
    present[e] = 0;
  }
  h_ = std::make_unique<SearchComponentTracker>(g_, present);
}

std::vector<EdgeId> Decremental2EC::delete_edge(EdgeId e) {
  if (e >= deleted_.size()) throw ApplicationError("unknown edge " + std::to_string(e));
  if (deleted_[e]) throw ApplicationError("edge " + std::to_string(e) + " was already deleted");
  deleted_[e] = 1;
  std::vector<EdgeId> fresh;
  if (bridge_[e]) return fresh;
  const auto r = dual_->contract(e);
  h_->delete_edge(e);
  for (EdgeId f : r.self_loops) {
    bridge_[f] = 1;
    h_->delete_edge(f);
    fresh.push_back(f);
  }
  std::sort(fresh.begin(), fresh.end());
  return fresh;
}

std::vector<EdgeId> Decremental2EC::bridges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < deleted_.size(); ++e)
    if (is_bridge(e)) out.push_back(e);
  return out;
}

std::vector<std::vector<VertexId>> max_kec_subgraphs(const PlanarMultigraph& input, std::size_t k,
                                                     ContractConfig config) {
  if (k != 2 && k != 3) throw ApplicationError("k must be 2 or 3");
  const PlanarMultigraph g = embedded_copy(input);
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  auto d = dual_of_components(g);
  ContractionStructure dual(d.graph, config);

  std::deque<EdgeId> queue;
  std::vector<char> queued(m, 0), deleted(m, 0);
  auto push = [&](EdgeId e) {
    if (!queued[e]) {
      queued[e] = 1;
      queue.push_back(e);
    }
  };
  auto harvest = [&](const ContractReport& r) {
    for (EdgeId e : r.self_loops) push(e);
    if (k == 3)
      for (const auto& p : r.parallelisms) {
        push(p.from);
        push(p.to);
      }
  };
  harvest(dual.init_report());
  while (!queue.empty()) {
    const EdgeId e = queue.front();
    queue.pop_front();
    deleted[e] = 1;
    if (dual.state(e) == EdgeState::live) harvest(dual.contract(e));
  }

  std::vector<std::uint32_t> comp(n, kNoVertex);
  std::vector<std::vector<VertexId>> parts;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    comp[s] = static_cast<std::uint32_t>(parts.size());
    parts.push_back({s});
    for (std::size_t i = 0; i < parts.back().size(); ++i)
      for (Dart dd : g.darts(parts.back()[i])) {
        if (deleted[edge_of(dd)]) continue;
        const VertexId w = g.head(dd);
        if (comp[w] == kNoVertex) {
          comp[w] = comp[s];
          parts.back().push_back(w);
        }
      }
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace pgc
