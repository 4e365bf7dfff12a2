#include "pgc/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "pgc/embedding.hpp"

namespace pgc {

namespace {

std::uint64_t directed_key(VertexId a, VertexId b) { return (std::uint64_t(a) << 32) | b; }
std::uint64_t undirected_key(VertexId a, VertexId b) { return a < b ? directed_key(a, b) : directed_key(b, a); }

PlanarMultigraph embedded_or_throw(const PlanarMultigraph& g) {
  auto e = embed(g);
  if (!e) throw GraphError("generator produced a non-planar graph");
  return std::move(*e);
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rand_below(rng, i)]);
}

// Builds a graph from an edge list after shuffling vertex ids and edge order.
PlanarMultigraph relabeled(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);
  shuffle(edges, rng);
  PlanarMultigraph g(n);
  for (auto [u, v] : edges) g.add_edge(perm[u], perm[v]);
  return g;
}

std::vector<std::pair<VertexId, VertexId>> triangulation_edges(std::size_t n, Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n <= 1) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<std::array<VertexId, 3>> tri{{0, 1, 2}, {0, 2, 1}};
  std::unordered_map<std::uint64_t, std::uint32_t> tri_of;  // directed edge a->b -> triangle holding it
  std::vector<std::uint32_t> degree(n, 0);
  degree[0] = degree[1] = degree[2] = 2;
  auto attach = [&](std::uint32_t t) {
    for (int i = 0; i < 3; ++i) tri_of[directed_key(tri[t][i], tri[t][(i + 1) % 3])] = t;
  };
  attach(0);
  attach(1);
  for (VertexId v = 3; v < n; ++v) {
    const auto t = static_cast<std::uint32_t>(rand_below(rng, tri.size()));
    const auto [a, b, c] = tri[t];
    tri[t] = {a, b, v};
    tri.push_back({b, c, v});
    tri.push_back({c, a, v});
    attach(t);
    attach(static_cast<std::uint32_t>(tri.size() - 2));
    attach(static_cast<std::uint32_t>(tri.size() - 1));
    degree[a]++, degree[b]++, degree[c]++;
    degree[v] = 3;
  }
  std::unordered_set<std::uint64_t> present;
  for (const auto& t : tri)
    for (int i = 0; i < 3; ++i) present.insert(undirected_key(t[i], t[(i + 1) % 3]));

  // Random flips spread the degree distribution away from the stacked shape.
  const std::size_t flips = 2 * n;
  for (std::size_t k = 0; k < flips; ++k) {
    const auto t1 = static_cast<std::uint32_t>(rand_below(rng, tri.size()));
    const int i = static_cast<int>(rand_below(rng, 3));
    const VertexId a = tri[t1][i], b = tri[t1][(i + 1) % 3], c = tri[t1][(i + 2) % 3];
    const std::uint32_t t2 = tri_of.at(directed_key(b, a));
    VertexId d = kNoVertex;
    for (int j = 0; j < 3; ++j)
      if (tri[t2][j] != a && tri[t2][j] != b) d = tri[t2][j];
    if (c == d || present.count(undirected_key(c, d)) || degree[a] <= 3 || degree[b] <= 3) continue;
    present.erase(undirected_key(a, b));
    present.insert(undirected_key(c, d));
    tri_of.erase(directed_key(a, b));
    tri_of.erase(directed_key(b, a));
    tri[t1] = {a, d, c};
    tri[t2] = {d, b, c};
    attach(t1);
    attach(t2);
    degree[a]--, degree[b]--, degree[c]++, degree[d]++;
  }
  for (std::uint64_t key : present) edges.emplace_back(VertexId(key >> 32), VertexId(key & 0xffffffffu));
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

PlanarMultigraph grid_graph(std::size_t rows, std::size_t cols) {
  PlanarMultigraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c + 1 < cols; ++c) g.add_edge(VertexId(r * cols + c), VertexId(r * cols + c + 1));
  for (std::size_t r = 0; r + 1 < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g.add_edge(VertexId(r * cols + c), VertexId((r + 1) * cols + c));
  return embedded_or_throw(g);
}

PlanarMultigraph path_graph(std::size_t n) {
  PlanarMultigraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(VertexId(i), VertexId(i + 1));
  return embedded_or_throw(g);
}

PlanarMultigraph cycle_graph(std::size_t n) {
  PlanarMultigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(VertexId(i), VertexId((i + 1) % n));
  return embedded_or_throw(g);
}

PlanarMultigraph complete_graph(std::size_t n) {
  PlanarMultigraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  if (n > 4) return g;
  return embedded_or_throw(g);
}

PlanarMultigraph random_triangulation(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  auto edges = triangulation_edges(n, rng);
  return embedded_or_throw(relabeled(n, std::move(edges), rng));
}

PlanarMultigraph random_planar(std::size_t n, std::uint64_t seed, double density) {
  Rng rng(seed);
  auto edges = triangulation_edges(n, rng);
  shuffle(edges, rng);
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<VertexId, VertexId>> kept;
  const auto threshold = static_cast<std::uint64_t>(density * 1e9);
  for (auto [u, v] : edges) {
    const VertexId a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      kept.emplace_back(u, v);
    } else if (rand_below(rng, 1000000000) < threshold) {
      kept.emplace_back(u, v);
    }
  }
  return embedded_or_throw(relabeled(n, std::move(kept), rng));
}

PlanarMultigraph random_planar_multigraph(std::size_t n, std::uint64_t seed, double density, double parallel_rate,
                                          double loop_rate) {
  PlanarMultigraph base = random_planar(n, seed, density);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < base.num_edges(); ++e) {
    edges.push_back(base.endpoints(e));
    while (rand_below(rng, 1000000) < static_cast<std::uint64_t>(parallel_rate * 1e6)) edges.push_back(base.endpoints(e));
  }
  for (VertexId v = 0; v < n; ++v)
    if (rand_below(rng, 1000000) < static_cast<std::uint64_t>(loop_rate * 1e6)) edges.emplace_back(v, v);
  return embedded_or_throw(relabeled(n, std::move(edges), rng));
}

void assign_random_weights(PlanarMultigraph& g, std::uint64_t seed, std::int64_t max_weight) {
  Rng rng(seed ^ 0x5851f42d4c957f2dULL);
  std::vector<double> w(g.num_edges());
  for (auto& x : w) x = double(1 + static_cast<std::int64_t>(rand_below(rng, std::uint64_t(max_weight))));
  g.set_weights(std::move(w));
}

}  // namespace pgc
