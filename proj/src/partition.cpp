#include "pgc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "separator.hpp"

namespace pgc {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Split {
  std::vector<EdgeId> a;
  std::vector<EdgeId> b;
};

class Divider {
 public:
  Divider(const PlanarMultigraph& g, std::size_t r, double slack)
      : g_(g), r_(r), slack_(slack), local_(g.num_vertices(), kNone), count_(g.num_vertices(), 0),
        seen_(g.num_vertices(), 0), tag_(g.num_vertices(), 0) {}

  RDivision run(const std::vector<EdgeId>& edges) {
    RDivision div;
    div.r = r_;
    div.slack = slack_;
    if (edges.empty()) return div;
    std::vector<std::vector<EdgeId>> pieces{edges};
    for (VertexId v : vertices_of(edges)) count_[v] = 1;

    // Phase 1: split until every piece has at most r vertices.
    for (std::size_t i = 0; i < pieces.size();) {
      if (vertices_of(pieces[i]).size() <= r_) {
        ++i;
        continue;
      }
      Split s = split(pieces[i], false);
      commit(s);
      pieces[i] = std::move(s.a);
      pieces.push_back(std::move(s.b));
    }

    // Phase 2: split pieces whose boundary is too large, weighting the boundary vertices.
    const auto target = static_cast<std::size_t>(std::max(2.0, std::floor(0.5 * slack_ * std::sqrt(double(r_)))));
    std::vector<char> stuck(pieces.size(), 0);
    for (std::size_t i = 0; i < pieces.size();) {
      const std::size_t b = boundary_of(pieces[i]).size();
      if (stuck[i] || b <= target || pieces[i].size() < 2) {
        ++i;
        continue;
      }
      Split s = split(pieces[i], true);
      if (std::max(child_boundary(s.a, s.b), child_boundary(s.b, s.a)) >= b) {
        stuck[i] = 1;
        continue;
      }
      commit(s);
      pieces[i] = std::move(s.a);
      pieces.push_back(std::move(s.b));
      stuck.push_back(0);
    }

    for (auto& edges_of_piece : pieces) {
      Piece p;
      std::sort(edges_of_piece.begin(), edges_of_piece.end());
      p.vertices = vertices_of(edges_of_piece);
      std::sort(p.vertices.begin(), p.vertices.end());
      for (VertexId v : p.vertices)
        if (count_[v] >= 2) p.boundary.push_back(v);
      p.edges = std::move(edges_of_piece);
      div.pieces.push_back(std::move(p));
    }
    for (const auto& p : div.pieces)
      for (VertexId v : p.vertices) count_[v] = 0;
    return div;
  }

 private:
  std::vector<VertexId> vertices_of(const std::vector<EdgeId>& edges) {
    ++epoch_;
    std::vector<VertexId> out;
    for (EdgeId e : edges) {
      auto [u, v] = g_.endpoints(e);
      for (VertexId x : {u, v})
        if (seen_[x] != epoch_) {
          seen_[x] = epoch_;
          out.push_back(x);
        }
    }
    return out;
  }

  void tag(const std::vector<VertexId>& vs) {
    ++tag_epoch_;
    for (VertexId v : vs) tag_[v] = tag_epoch_;
  }
  bool tagged(VertexId v) const { return tag_[v] == tag_epoch_; }

  std::vector<VertexId> boundary_of(const std::vector<EdgeId>& edges) {
    std::vector<VertexId> out;
    for (VertexId v : vertices_of(edges))
      if (count_[v] >= 2) out.push_back(v);
    return out;
  }

  // Boundary size `mine` would have next to `other` once their parent is replaced by the two.
  std::size_t child_boundary(const std::vector<EdgeId>& mine, const std::vector<EdgeId>& other) {
    tag(vertices_of(other));
    std::size_t b = 0;
    for (VertexId v : vertices_of(mine))
      if (count_[v] >= 2 || tagged(v)) ++b;
    return b;
  }

  void commit(const Split& s) {
    tag(vertices_of(s.a));
    for (VertexId v : vertices_of(s.b))
      if (tagged(v)) ++count_[v];
  }

  Split split(const std::vector<EdgeId>& edges, bool boundary_weights) {
    std::vector<VertexId> global;
    detail::LocalPlaneGraph L = detail::restrict_to(g_, edges, local_, global);
    for (VertexId v : global) local_[v] = kNone;
    const std::size_t n = L.n;

    std::vector<double> weight(n, 1.0);
    if (boundary_weights) {
      const double light = 1.0 / double(n + 1);
      for (std::size_t i = 0; i < n; ++i) weight[i] = count_[global[i]] >= 2 ? 1.0 : light;
    }

    std::vector<std::vector<std::uint32_t>> out(n);
    for (std::uint32_t d = 0; d < L.tail.size(); ++d) out[L.tail[d]].push_back(d);

    // Components after removing `cut` (all vertices stay if cut is empty).
    auto components = [&](const std::vector<char>& cut, std::vector<std::uint32_t>& comp) {
      comp.assign(n, kNone);
      std::uint32_t count = 0;
      std::vector<std::uint32_t> stack;
      for (std::uint32_t s = 0; s < n; ++s) {
        if (cut[s] || comp[s] != kNone) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
          const std::uint32_t v = stack.back();
          stack.pop_back();
          for (std::uint32_t d : out[v]) {
            const std::uint32_t w = L.head(d);
            if (cut[w] || comp[w] != kNone) continue;
            comp[w] = count;
            stack.push_back(w);
          }
        }
        ++count;
      }
      return count;
    };

    std::vector<char> cut(n, 0);
    std::vector<std::uint32_t> comp;
    std::uint32_t k = components(cut, comp);
    if (k == 1) {
      for (std::uint32_t v : detail::cycle_separator(L, weight)) cut[v] = 1;
      k = components(cut, comp);
    }

    Split s;
    if (k >= 2) {
      std::vector<double> cw(k, 0.0);
      for (std::uint32_t v = 0; v < n; ++v)
        if (!cut[v]) cw[comp[v]] += weight[v];
      std::vector<std::uint32_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return cw[x] > cw[y]; });
      std::vector<char> side(k, 0);
      double wa = 0, wb = 0;
      for (std::uint32_t c : order) {
        if (wa <= wb) {
          wa += cw[c];
        } else {
          side[c] = 1;
          wb += cw[c];
        }
      }
      for (std::uint32_t i = 0; i < edges.size(); ++i) {
        const std::uint32_t x = L.tail[2 * i];
        const std::uint32_t y = L.tail[2 * i + 1];
        bool to_b;
        if (!cut[x])
          to_b = side[comp[x]];
        else if (!cut[y])
          to_b = side[comp[y]];
        else
          to_b = s.b.size() < s.a.size();
        (to_b ? s.b : s.a).push_back(edges[i]);
      }
    }
    if (s.a.empty() || s.b.empty()) s = halve(edges, L, out);
    return s;
  }

  // Last resort: cut the BFS edge order in half.
  Split halve(const std::vector<EdgeId>& edges, const detail::LocalPlaneGraph& L,
              const std::vector<std::vector<std::uint32_t>>& out) {
    std::vector<std::uint32_t> rank(L.n, kNone);
    std::uint32_t next_rank = 0;
    for (std::uint32_t s = 0; s < L.n; ++s) {
      if (rank[s] != kNone) continue;
      std::vector<std::uint32_t> queue{s};
      rank[s] = next_rank++;
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (std::uint32_t d : out[queue[qi]]) {
          const std::uint32_t w = L.head(d);
          if (rank[w] == kNone) {
            rank[w] = next_rank++;
            queue.push_back(w);
          }
        }
    }
    std::vector<std::uint32_t> idx(edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](std::uint32_t i) {
      const std::uint32_t x = rank[L.tail[2 * i]], y = rank[L.tail[2 * i + 1]];
      return std::make_pair(std::min(x, y), std::max(x, y));
    };
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    Split s;
    for (std::size_t i = 0; i < idx.size(); ++i) (i < idx.size() / 2 ? s.a : s.b).push_back(edges[idx[i]]);
    return s;
  }

  const PlanarMultigraph& g_;
  std::size_t r_;
  double slack_;
  std::vector<std::uint32_t> local_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> tag_;
  std::uint32_t epoch_ = 0;
  std::uint32_t tag_epoch_ = 0;
};

void require_simple_embedded(const PlanarMultigraph& g) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.endpoints(e);
    if (u == v) throw GraphError("division needs a simple graph; edge " + std::to_string(g.edge_label(e)) + " is a self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert((std::uint64_t(u) << 32) | v).second)
      throw GraphError("division needs a simple graph; edge " + std::to_string(g.edge_label(e)) + " is parallel");
  }
  if (!g.embedded()) throw GraphError("division needs an embedded graph");
}

std::size_t fourth_power_of_log(double x) {
  const double l = std::log2(std::max(x, 2.0));
  return static_cast<std::size_t>(std::ceil(l * l * l * l - 1e-9));
}

}  // namespace

std::size_t RDivision::total_boundary() const {
  std::size_t total = 0;
  for (const auto& p : pieces) total += p.boundary.size();
  return total;
}

RDivision divide_edges(const PlanarMultigraph& g, const std::vector<EdgeId>& edges, std::size_t r, double slack) {
  if (r < 4) throw GraphError("division parameter r must be at least 4");
  if (!g.embedded()) throw GraphError("division needs an embedded graph");
  Divider divider(g, r, slack);
  return divider.run(edges);
}

RDivision r_division(const PlanarMultigraph& g, std::size_t r, double slack) {
  if (r < 4) throw GraphError("division parameter r must be at least 4");
  require_simple_embedded(g);
  std::vector<EdgeId> all(g.num_edges());
  std::iota(all.begin(), all.end(), 0);
  return divide_edges(g, all, r, slack);
}

std::size_t top_parameter(std::size_t n) { return std::max<std::size_t>(4, fourth_power_of_log(double(n))); }

std::size_t sub_parameter(std::size_t r1) { return std::max<std::size_t>(4, fourth_power_of_log(double(r1))); }

NestedDivision nested_division(const PlanarMultigraph& g, double slack, std::optional<std::size_t> r1,
                               std::optional<std::size_t> r2) {
  NestedDivision nd;
  nd.r1 = std::max<std::size_t>(4, r1.value_or(top_parameter(g.num_vertices())));
  nd.r2 = std::max<std::size_t>(4, r2.value_or(sub_parameter(nd.r1)));
  nd.top = r_division(g, nd.r1, slack);
  nd.sub.reserve(nd.top.pieces.size());
  for (const auto& piece : nd.top.pieces) nd.sub.push_back(divide_edges(g, piece.edges, nd.r2, slack));
  return nd;
}

std::string check_division(const PlanarMultigraph& g, const std::vector<EdgeId>& edges, const RDivision& div,
                           std::size_t max_pieces_per_vertex) {
  std::ostringstream why;
  std::vector<EdgeId> all;
  for (const auto& p : div.pieces) all.insert(all.end(), p.edges.begin(), p.edges.end());
  std::sort(all.begin(), all.end());
  std::vector<EdgeId> want = edges;
  std::sort(want.begin(), want.end());
  if (all != want) return "pieces do not cover the edges exactly once";

  std::vector<std::uint32_t> count(g.num_vertices(), 0);
  std::vector<char> in_graph(g.num_vertices(), 0);
  for (EdgeId e : edges) {
    in_graph[g.endpoints(e).first] = 1;
    in_graph[g.endpoints(e).second] = 1;
  }
  std::vector<std::vector<VertexId>> vertex_sets;
  for (const auto& p : div.pieces) {
    if (p.edges.empty()) return "empty piece";
    std::vector<VertexId> vs;
    for (EdgeId e : p.edges) {
      vs.push_back(g.endpoints(e).first);
      vs.push_back(g.endpoints(e).second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs != p.vertices) return "piece vertex set is wrong";
    for (VertexId v : vs) ++count[v];
    vertex_sets.push_back(std::move(vs));
  }
  const std::size_t n = static_cast<std::size_t>(std::count(in_graph.begin(), in_graph.end(), 1));
  const double r = double(div.r);
  for (std::size_t i = 0; i < div.pieces.size(); ++i) {
    std::vector<VertexId> boundary;
    for (VertexId v : vertex_sets[i])
      if (count[v] >= 2) boundary.push_back(v);
    if (boundary != div.pieces[i].boundary) return "piece " + std::to_string(i) + " boundary is wrong";
    if (double(vertex_sets[i].size()) > div.slack * r) {
      why << "piece " << i << " has " << vertex_sets[i].size() << " vertices";
      return why.str();
    }
    if (double(boundary.size()) > div.slack * std::sqrt(r)) {
      why << "piece " << i << " has " << boundary.size() << " boundary vertices";
      return why.str();
    }
  }
  if (double(div.pieces.size()) > std::max(1.0, div.slack * double(n) / r)) {
    why << div.pieces.size() << " pieces for " << n << " vertices";
    return why.str();
  }
  if (max_pieces_per_vertex > 0)
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (count[v] > max_pieces_per_vertex) {
        why << "vertex " << v << " lies in " << count[v] << " pieces";
        return why.str();
      }
  return {};
}

void write_division(std::ostream& out, const PlanarMultigraph& g, const RDivision& div) {
  for (std::size_t i = 0; i < div.pieces.size(); ++i) {
    const auto& p = div.pieces[i];
    std::vector<std::int64_t> edges, boundary;
    for (EdgeId e : p.edges) edges.push_back(g.edge_label(e));
    for (VertexId v : p.boundary) boundary.push_back(g.vertex_label(v));
    std::sort(edges.begin(), edges.end());
    std::sort(boundary.begin(), boundary.end());
    out << "piece " << i << " edges";
    for (auto e : edges) out << ' ' << e;
    out << " boundary";
    for (auto v : boundary) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace pgc
