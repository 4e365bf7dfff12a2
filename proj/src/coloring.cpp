#include <algorithm>
#include <array>

#include "pgc/applications.hpp"

namespace pgc {

namespace {

struct Frame {
  VertexId u = kNoVertex;
  std::array<VertexId, 5> z{};
  std::size_t z_size = 0;
  VertexId first = kNoVertex;   // v, or x in the degree-5 case
  VertexId second = kNoVertex;  // y in the degree-5 case
  VertexId survivor = kNoVertex;
};

}  // namespace

std::vector<int> five_coloring(const PlanarMultigraph& g, ContractConfig config) {
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.is_loop(e)) throw ApplicationError("a graph with a self-loop has no proper coloring");
  ContractionStructure ds(g, config);
  const std::size_t n = g.num_vertices();

  std::vector<VertexId> queue;
  std::vector<char> queued(n, 0);
  auto offer = [&](VertexId w) {
    if (!queued[w] && ds.is_live_vertex(w) && ds.deg(w) <= 5) {
      queued[w] = 1;
      queue.push_back(w);
    }
  };
  auto contract_and_update = [&](EdgeId e) {
    const auto r = ds.contract(e);
    offer(r.survivor);
    for (const auto& p : r.parallelisms) {
      const auto [a, b] = ds.vertices(p.from);
      offer(a);
      offer(b);
    }
    return r.survivor;
  };
  for (VertexId v = 0; v < n; ++v) offer(v);

  std::vector<Frame> stack;
  std::size_t finished = 0;
  while (!queue.empty()) {
    const VertexId u = queue.back();
    queue.pop_back();
    queued[u] = 0;
    if (!ds.is_live_vertex(u) || ds.deg(u) > 5) continue;
    Frame f;
    f.u = u;
    for (auto [w, e] : ds.neighbors(u)) f.z[f.z_size++] = w;
    std::sort(f.z.begin(), f.z.begin() + f.z_size);
    if (f.z_size == 0) {
      ++finished;
    } else if (f.z_size <= 4) {
      f.first = f.z[0];
      f.survivor = contract_and_update(ds.edge(u, f.first));
    } else {
      for (std::size_t i = 0; i < 5 && f.first == kNoVertex; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
          if (ds.edge(f.z[i], f.z[j]) == kNoEdge) {
            f.first = f.z[i];
            f.second = f.z[j];
            break;
          }
      if (f.first == kNoVertex) throw ApplicationError("graph is not planar: found K5");
      const VertexId s1 = contract_and_update(ds.edge(u, f.first));
      f.survivor = contract_and_update(ds.edge(s1, f.second));
    }
    stack.push_back(f);
  }
  if (finished != ds.num_vertices()) throw std::logic_error("no vertex of degree at most 5 in a nonempty graph");

  std::vector<int> color(n, 0);
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.first != kNoVertex) color[f.first] = color[f.survivor];
    if (f.second != kNoVertex) color[f.second] = color[f.survivor];
    bool used[6] = {};
    for (std::size_t i = 0; i < f.z_size; ++i) used[color[f.z[i]]] = true;
    int c = 1;
    while (used[c]) ++c;
    color[f.u] = c;
  }
  return color;
}

bool is_proper_five_coloring(const PlanarMultigraph& g, const std::vector<int>& colors) {
  if (colors.size() != g.num_vertices()) return false;
  for (int c : colors)
    if (c < 1 || c > 5) return false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.endpoints(e);
    if (colors[a] == colors[b]) return false;
  }
  return true;
}

}  // namespace pgc
