#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "pgc/oracle.hpp"

namespace pgc {

namespace {

bool is_alive(const std::vector<char>& alive, EdgeId e) { return alive.empty() || alive[e]; }

}  // namespace

std::vector<EdgeId> oracle_bridges(const PlanarMultigraph& g, const std::vector<char>& alive) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::uint32_t clock = 0;
  std::vector<EdgeId> out;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s]) continue;
    std::vector<Frame> stack{{s, kNoEdge, 0}};
    disc[s] = low[s] = ++clock;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& ds = g.darts(f.v);
      if (f.next < ds.size()) {
        const Dart d = ds[f.next++];
        const EdgeId e = edge_of(d);
        if (e == f.via || !is_alive(alive, e) || g.is_loop(e)) continue;
        const VertexId w = g.head(d);
        if (disc[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = ++clock;
          stack.push_back({w, e, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId p = stack.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] > disc[p]) out.push_back(done.via);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> oracle_2ec_components(const PlanarMultigraph& g, const std::vector<char>& alive) {
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  std::vector<char> keep(m, 1);
  for (EdgeId e = 0; e < m; ++e) keep[e] = is_alive(alive, e);
  for (EdgeId b : oracle_bridges(g, alive)) keep[b] = 0;
  std::vector<std::uint32_t> comp(n, kNoVertex);
  std::uint32_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    comp[s] = next;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : g.darts(v)) {
        if (!keep[edge_of(d)]) continue;
        const VertexId w = g.head(d);
        if (comp[w] == kNoVertex) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

namespace {

// Global minimum cut of the multigraph given by a capacity matrix; returns (value, one side).
std::pair<std::size_t, std::vector<std::size_t>> stoer_wagner(std::vector<std::vector<std::size_t>> w) {
  const std::size_t n = w.size();
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  std::vector<char> merged(n, 0);
  std::size_t best = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best_side;
  for (std::size_t phase = 1; phase < n; ++phase) {
    std::vector<std::size_t> key(n, 0);
    std::vector<char> added(n, 0);
    std::size_t prev = n, last = n;
    for (std::size_t it = 0; it + phase <= n; ++it) {
      std::size_t sel = n;
      for (std::size_t v = 0; v < n; ++v)
        if (!merged[v] && !added[v] && (sel == n || key[v] > key[sel])) sel = v;
      added[sel] = 1;
      prev = last;
      last = sel;
      for (std::size_t v = 0; v < n; ++v)
        if (!merged[v] && !added[v]) key[v] += w[sel][v];
    }
    if (key[last] < best) {
      best = key[last];
      best_side = members[last];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    for (std::size_t v = 0; v < n; ++v) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    merged[last] = 1;
  }
  return {best, best_side};
}

}  // namespace

std::vector<std::vector<VertexId>> oracle_kec(const PlanarMultigraph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (n > 60) throw OracleError("oracle_kec is capped at 60 vertices");
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> work;
  {
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (n) work.push_back(all);
  }
  while (!work.empty()) {
    auto s = std::move(work.back());
    work.pop_back();
    if (s.size() == 1) {
      out.push_back(s);
      continue;
    }
    std::vector<std::size_t> local(n, n);
    for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = i;
    std::vector<std::vector<std::size_t>> w(s.size(), std::vector<std::size_t>(s.size(), 0));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [a, b] = g.endpoints(e);
      if (a == b || local[a] == n || local[b] == n) continue;
      ++w[local[a]][local[b]];
      ++w[local[b]][local[a]];
    }
    auto [value, side] = stoer_wagner(w);
    if (value >= k) {
      out.push_back(s);
      continue;
    }
    std::vector<char> in(s.size(), 0);
    for (std::size_t i : side) in[i] = 1;
    std::vector<VertexId> a, b;
    for (std::size_t i = 0; i < s.size(); ++i) (in[i] ? a : b).push_back(s[i]);
    work.push_back(std::move(a));
    work.push_back(std::move(b));
  }
  for (auto& part : out) std::sort(part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<EdgeId>> oracle_upm(const PlanarMultigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 16) throw OracleError("oracle_upm is capped at 16 vertices");
  if (n % 2) return std::nullopt;
  std::vector<char> matched(n, 0);
  std::vector<EdgeId> current, found;
  std::size_t count = 0;
  std::function<void()> search = [&] {
    if (count >= 2) return;
    VertexId v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      if (++count == 1) found = current;
      return;
    }
    matched[v] = 1;
    for (Dart d : g.darts(v)) {
      const EdgeId e = edge_of(d);
      const VertexId w = g.head(d);
      if (w == v || matched[w]) continue;
      matched[w] = 1;
      current.push_back(e);
      search();
      current.pop_back();
      matched[w] = 0;
    }
    matched[v] = 0;
  };
  search();
  if (count != 1) return std::nullopt;
  std::sort(found.begin(), found.end());
  return found;
}

double oracle_mst(const PlanarMultigraph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return g.weight(a) < g.weight(b); });
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexId(VertexId)> find = [&](VertexId v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  double total = 0;
  for (EdgeId e : order) {
    const auto [a, b] = g.endpoints(e);
    const VertexId ra = find(a), rb = find(b);
    if (ra == rb) continue;
    parent[ra] = rb;
    total += g.weight(e);
  }
  return total;
}

FaceOracleResult oracle_face_trace(const PlanarMultigraph& g, const std::vector<char>& alive, EdgeId e) {
  if (!g.embedded()) throw OracleError("face trace needs an embedded graph");
  const std::size_t darts = 2 * g.num_edges();
  auto rot_next_alive = [&](Dart d) {
    Dart x = g.rot_next(d);
    while (!is_alive(alive, edge_of(x))) x = g.rot_next(x);
    return x;
  };
  std::vector<std::uint32_t> face(darts, kNoVertex);
  for (Dart s = 0; s < darts; ++s) {
    if (!is_alive(alive, edge_of(s)) || face[s] != kNoVertex) continue;
    Dart d = s;
    do {
      face[d] = s;
      d = rot_next_alive(reverse(d));
    } while (d != s);
  }
  FaceOracleResult r;
  r.left = face[2 * e];
  r.right = face[2 * e + 1];
  if (r.left == r.right) throw OracleError("edge " + std::to_string(e) + " is a bridge");
  std::set<VertexId> on_left, on_right;
  std::set<std::uint32_t> near_left, near_right;
  for (Dart d = 0; d < darts; ++d) {
    if (!is_alive(alive, edge_of(d))) continue;
    if (face[d] == r.left) on_left.insert(g.tail(d));
    if (face[d] == r.right) on_right.insert(g.tail(d));
    const std::uint32_t other = face[reverse(d)];
    if (face[d] == r.left) near_left.insert(other);
    if (face[d] == r.right) near_right.insert(other);
  }
  std::set_intersection(on_left.begin(), on_left.end(), on_right.begin(), on_right.end(),
                        std::back_inserter(r.common_vertices));
  for (std::uint32_t f : near_left)
    if (f != r.left && f != r.right && near_right.count(f)) r.common_faces.push_back(f);
  return r;
}

}  // namespace pgc
