#include "separator.hpp"

#include <algorithm>
#include <limits>

namespace pgc::detail {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

LocalPlaneGraph restrict_to(const PlanarMultigraph& g, const std::vector<EdgeId>& edges,
                            std::vector<std::uint32_t>& local_of_vertex, std::vector<VertexId>& global_of_local) {
  LocalPlaneGraph L;
  global_of_local.clear();
  std::vector<std::pair<EdgeId, std::uint32_t>> local_of_edge;
  local_of_edge.reserve(edges.size());
  L.tail.resize(2 * edges.size());
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = g.endpoints(edges[i]);
    for (VertexId x : {u, v}) {
      if (local_of_vertex[x] == kNone) {
        local_of_vertex[x] = static_cast<std::uint32_t>(global_of_local.size());
        global_of_local.push_back(x);
      }
    }
    L.tail[2 * i] = local_of_vertex[u];
    L.tail[2 * i + 1] = local_of_vertex[v];
    local_of_edge.emplace_back(edges[i], i);
  }
  std::sort(local_of_edge.begin(), local_of_edge.end());
  auto local_edge = [&](EdgeId e) -> std::uint32_t {
    auto it = std::lower_bound(local_of_edge.begin(), local_of_edge.end(), std::make_pair(e, 0u));
    return (it != local_of_edge.end() && it->first == e) ? it->second : kNone;
  };

  L.n = global_of_local.size();
  L.next.assign(L.tail.size(), kNone);
  L.any_dart.assign(L.n, kNone);
  std::vector<std::uint32_t> ring;
  for (std::uint32_t lv = 0; lv < L.n; ++lv) {
    ring.clear();
    for (Dart d : g.darts(global_of_local[lv])) {
      const std::uint32_t le = local_edge(edge_of(d));
      if (le != kNone) ring.push_back(2 * le + (d & 1u));
    }
    for (std::size_t k = 0; k < ring.size(); ++k) L.next[ring[k]] = ring[(k + 1) % ring.size()];
    if (!ring.empty()) L.any_dart[lv] = ring.front();
  }
  return L;
}

std::vector<std::uint32_t> cycle_separator(const LocalPlaneGraph& g, const std::vector<double>& weight) {
  if (g.num_edges() == 0) return {};
  // Triangulate by placing a star vertex inside every face that is not a triangle.
  std::vector<std::uint32_t> tail = g.tail;
  std::vector<std::uint32_t> next = g.next;
  std::size_t n = g.n;
  {
    std::vector<char> seen(g.tail.size(), 0);
    std::vector<std::uint32_t> walk;
    for (std::uint32_t start = 0; start < g.tail.size(); ++start) {
      if (seen[start]) continue;
      walk.clear();
      std::uint32_t d = start;
      do {
        seen[d] = 1;
        walk.push_back(d);
        d = g.next[d ^ 1u];
      } while (d != start);
      if (walk.size() == 3) continue;
      const auto star = static_cast<std::uint32_t>(n++);
      const auto base = static_cast<std::uint32_t>(tail.size());
      const std::size_t len = walk.size();
      tail.resize(tail.size() + 2 * len);
      next.resize(next.size() + 2 * len);
      for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t x = base + 2 * static_cast<std::uint32_t>(i);
        const std::uint32_t corner_in = walk[i] ^ 1u;
        tail[x] = g.tail[corner_in];
        tail[x + 1] = star;
        next[x] = next[corner_in];
        next[corner_in] = x;
        const std::size_t prev = (i + len - 1) % len;
        next[x + 1] = base + 2 * static_cast<std::uint32_t>(prev) + 1;
      }
    }
  }

  const std::size_t darts = tail.size();
  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::uint32_t d = 0; d < darts; ++d) out[tail[d]].push_back(d);

  // BFS tree from a real vertex.
  std::vector<std::uint32_t> parent_dart(n, kNone);
  std::vector<std::uint32_t> depth(n, kNone);
  std::vector<char> tree_edge(darts / 2, 0);
  {
    std::vector<std::uint32_t> queue{0};
    depth[0] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t v = queue[qi];
      for (std::uint32_t d : out[v]) {
        const std::uint32_t w = tail[d ^ 1u];
        if (depth[w] != kNone) continue;
        depth[w] = depth[v] + 1;
        parent_dart[w] = d;
        tree_edge[d / 2] = 1;
        queue.push_back(w);
      }
    }
  }

  // Faces of the triangulation and the dual spanning tree formed by the non-tree edges.
  std::vector<std::uint32_t> face(darts, kNone);
  std::size_t num_faces = 0;
  for (std::uint32_t start = 0; start < darts; ++start) {
    if (face[start] != kNone) continue;
    std::uint32_t d = start;
    do {
      face[d] = static_cast<std::uint32_t>(num_faces);
      d = next[d ^ 1u];
    } while (d != start);
    ++num_faces;
  }
  std::vector<std::vector<std::uint32_t>> dual_adj(num_faces);
  for (std::uint32_t e = 0; e < darts / 2; ++e) {
    if (tree_edge[e]) continue;
    dual_adj[face[2 * e]].push_back(e);
    dual_adj[face[2 * e + 1]].push_back(e);
  }
  std::vector<double> face_weight(num_faces, 0.0);
  double total = 0.0;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (out[v].empty()) continue;
    face_weight[face[out[v].front()]] += weight[v];
    total += weight[v];
  }
  std::vector<std::uint32_t> parent_edge(num_faces, kNone);
  std::vector<char> visited(num_faces, 0);
  std::vector<std::uint32_t> order{0};
  visited[0] = 1;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const std::uint32_t f = order[qi];
    for (std::uint32_t e : dual_adj[f]) {
      const std::uint32_t h = face[2 * e] == f ? face[2 * e + 1] : face[2 * e];
      if (visited[h]) continue;
      visited[h] = 1;
      parent_edge[h] = e;
      order.push_back(h);
    }
  }
  std::vector<double> inside = face_weight;
  for (std::size_t qi = order.size(); qi-- > 1;) {
    const std::uint32_t f = order[qi];
    const std::uint32_t e = parent_edge[f];
    const std::uint32_t p = face[2 * e] == f ? face[2 * e + 1] : face[2 * e];
    inside[p] += inside[f];
  }

  std::uint32_t best = kNone;
  double best_side = std::numeric_limits<double>::infinity();
  std::uint32_t best_len = kNone;
  const double good = 2.0 * total / 3.0;
  for (std::size_t qi = 1; qi < order.size(); ++qi) {
    const std::uint32_t f = order[qi];
    const std::uint32_t e = parent_edge[f];
    const double side = std::max(inside[f], total - inside[f]);
    const std::uint32_t len = depth[tail[2 * e]] + depth[tail[2 * e + 1]];
    const bool better = side <= good ? (best_side > good || len < best_len || (len == best_len && side < best_side))
                                     : side < best_side;
    if (best == kNone || better) {
      best = e;
      best_side = side;
      best_len = len;
    }
  }

  std::vector<std::uint32_t> cycle;
  if (best == kNone) return cycle;
  std::uint32_t a = tail[2 * best];
  std::uint32_t b = tail[2 * best + 1];
  auto take = [&](std::uint32_t v) {
    if (v < g.n) cycle.push_back(v);
  };
  while (depth[a] > depth[b]) {
    take(a);
    a = tail[parent_dart[a]];
  }
  while (depth[b] > depth[a]) {
    take(b);
    b = tail[parent_dart[b]];
  }
  while (a != b) {
    take(a);
    take(b);
    a = tail[parent_dart[a]];
    b = tail[parent_dart[b]];
  }
  take(a);
  return cycle;
}

}  // namespace pgc::detail
