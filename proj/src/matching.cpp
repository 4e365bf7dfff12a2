#include <algorithm>
#include <deque>

#include "pgc/applications.hpp"
#include "pgc/embedding.hpp"

namespace pgc {

std::optional<std::vector<EdgeId>> unique_perfect_matching(const PlanarMultigraph& input, ContractConfig config) {
  const std::size_t n = input.num_vertices();
  if (n % 2) return std::nullopt;
  auto embedded = embed(input);
  if (!embedded) throw ApplicationError("graph is not planar");
  const PlanarMultigraph& g = *embedded;

  Decremental2EC bridges(g, config);
  SearchComponentTracker current(g);
  std::deque<EdgeId> queue;
  auto remove = [&](EdgeId e) {
    if (bridges.is_deleted(e)) return;
    for (EdgeId b : bridges.delete_edge(e)) queue.push_back(b);
    current.delete_edge(e);
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) remove(e);
  for (EdgeId b : bridges.bridges()) queue.push_back(b);

  std::vector<EdgeId> matching;
  while (!queue.empty()) {
    const EdgeId b = queue.front();
    queue.pop_front();
    if (bridges.is_deleted(b)) continue;
    const auto [u, v] = g.endpoints(b);
    remove(b);
    if (current.component_size(u) % 2 == 0) continue;
    matching.push_back(b);
    for (VertexId w : {u, v})
      for (Dart d : g.darts(w)) remove(edge_of(d));
  }
  if (2 * matching.size() != n) return std::nullopt;
  std::sort(matching.begin(), matching.end());
  return matching;
}

}  // namespace pgc
