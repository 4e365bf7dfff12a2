#include <algorithm>

#include "pgc/applications.hpp"

namespace pgc {

MstResult minimum_spanning_tree(const PlanarMultigraph& g, ContractConfig config) {
  if (!g.has_weights()) throw ApplicationError("minimum spanning tree needs edge weights");
  if (g.num_vertices() > 0 && connected_components(g).count != 1)
    throw ApplicationError("minimum spanning tree needs a connected graph");
  config.direction = Direction::weighted;
  ContractionStructure ds(g, config);

  std::vector<VertexId> queue;
  std::vector<char> queued(g.num_vertices(), 0);
  auto offer = [&](VertexId w) {
    if (!queued[w] && ds.is_live_vertex(w) && ds.deg(w) <= 5) {
      queued[w] = 1;
      queue.push_back(w);
    }
  };
  for (VertexId v = 0; v < g.num_vertices(); ++v) offer(v);

  MstResult out;
  while (!queue.empty()) {
    const VertexId u = queue.back();
    queue.pop_back();
    queued[u] = 0;
    if (!ds.is_live_vertex(u) || ds.deg(u) == 0 || ds.deg(u) > 5) continue;
    EdgeId best = kNoEdge;
    for (auto [v, e] : ds.neighbors(u))
      if (best == kNoEdge || g.weight(e) < g.weight(best) || (g.weight(e) == g.weight(best) && e < best)) best = e;
    out.edges.push_back(best);
    out.weight += g.weight(best);
    const auto r = ds.contract(best);
    offer(r.survivor);
    for (const auto& p : r.parallelisms) {
      const auto [a, b] = ds.vertices(p.from);
      offer(a);
      offer(b);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.counters = ds.total_counters();
  return out;
}

}  // namespace pgc
