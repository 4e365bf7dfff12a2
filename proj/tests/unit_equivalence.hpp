#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pgc/embedding.hpp"
#include "pgc/generators.hpp"
#include "pgc/merge_unit.hpp"
#include "pgc/micro_unit.hpp"

namespace pgc::testing {

struct UnitInput {
  std::size_t t = 0;
  std::vector<UnitEdge> edges;
  std::vector<VertexId> border;
};

inline MergeReport normalized(MergeReport r) {
  std::sort(r.parallelisms.begin(), r.parallelisms.end());
  std::sort(r.border_edges.begin(), r.border_edges.end());
  return r;
}

inline std::vector<VertexId> iota_names(std::size_t t) {
  std::vector<VertexId> v(t);
  for (VertexId i = 0; i < t; ++i) v[i] = i;
  return v;
}

// Empty when both units expose the same state.
inline std::string compare_units(const VertexMerger& a, const VertexMerger& b, std::size_t t) {
  for (VertexId v = 0; v < t; ++v) {
    if (a.phi(v) != b.phi(v)) return "phi(" + std::to_string(v) + ") differs";
    const VertexId x = a.phi(v);
    if (x != v) continue;
    if (a.class_size(x) != b.class_size(x)) return "class size differs";
    if (a.is_border(x) != b.is_border(x)) return "border flag differs";
    auto pa = a.phi_inv(x), pb = b.phi_inv(x);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return "phi_inv differs";
    for (VertexId y = 0; y < t; ++y)
      if (a.phi(y) == y && y != x && a.find_edge(x, y) != b.find_edge(x, y))
        return "find_edge(" + std::to_string(x) + "," + std::to_string(y) + ") differs";
  }
  return {};
}

// Current vertex pairs that merge() accepts.
inline std::vector<std::pair<VertexId, VertexId>> legal_merges(const VertexMerger& u, std::size_t t) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId x = 0; x < t; ++x) {
    if (u.phi(x) != x) continue;
    for (VertexId y = x + 1; y < t; ++y) {
      if (u.phi(y) != y) continue;
      if (u.find_edge(x, y) != kNoEdge || (u.is_border(x) && u.is_border(y))) out.emplace_back(x, y);
    }
  }
  return out;
}

// Replays `ops` on a general and a micro unit; empty string when they agree at every step.
inline std::string replay_pair(const UnitInput& in, const std::vector<std::pair<VertexId, VertexId>>& ops,
                               const std::shared_ptr<MicroTable>& table) {
  MergeUnit general(iota_names(in.t), in.border, in.edges);
  MicroUnit micro(table, iota_names(in.t), in.border, in.edges);
  if (auto d = compare_units(general, micro, in.t); !d.empty()) return "init: " + d;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto ra = normalized(general.merge(ops[i].first, ops[i].second));
    const auto rb = normalized(micro.merge(ops[i].first, ops[i].second));
    const std::string where = "op " + std::to_string(i) + ": ";
    if (ra.survivor != rb.survivor || ra.absorbed != rb.absorbed) return where + "survivor differs";
    if (ra.parallelisms != rb.parallelisms) return where + "parallelisms differ";
    if (ra.border_edges != rb.border_edges) return where + "border edges differ";
    if (auto d = compare_units(general, micro, in.t); !d.empty()) return where + d;
  }
  return {};
}

// Every simple planar graph on t labelled vertices, every independent border set, every maximal
// sequence of legal merges. Calls `fail` with a description on each mismatch; returns the number of
// sequences checked.
inline std::size_t exhaustive_micro_check(std::size_t t, const std::shared_ptr<MicroTable>& table,
                                          const std::function<void(const std::string&)>& fail) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId a = 0; a < t; ++a)
    for (VertexId b = a + 1; b < t; ++b) slots.emplace_back(a, b);
  std::size_t sequences = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    UnitInput in;
    in.t = t;
    PlanarMultigraph g(t);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) {
        in.edges.push_back({static_cast<EdgeId>(in.edges.size()), slots[i].first, slots[i].second});
        g.add_edge(slots[i].first, slots[i].second);
      }
    if (!is_planar(g)) continue;
    for (std::uint32_t bmask = 0; bmask < (1u << t); ++bmask) {
      bool independent = true;
      for (const auto& e : in.edges)
        if ((bmask >> e.u & 1) && (bmask >> e.v & 1)) independent = false;
      if (!independent) continue;
      in.border.clear();
      for (VertexId v = 0; v < t; ++v)
        if (bmask >> v & 1) in.border.push_back(v);
      std::vector<std::pair<VertexId, VertexId>> ops;
      std::function<void()> explore = [&] {
        MergeUnit probe(iota_names(t), in.border, in.edges);
        for (auto [x, y] : ops) probe.merge(x, y);
        const auto next = legal_merges(probe, t);
        if (next.empty()) {
          ++sequences;
          if (auto d = replay_pair(in, ops, table); !d.empty())
            fail("t=" + std::to_string(t) + " edges=" + std::to_string(mask) + " border=" + std::to_string(bmask) +
                 " " + d);
          return;
        }
        for (auto op : next) {
          ops.push_back(op);
          explore();
          ops.pop_back();
        }
      };
      explore();
    }
  }
  return sequences;
}

// Random simple planar unit with an independent border set on t vertices.
inline UnitInput random_unit(std::size_t t, std::uint64_t seed) {
  Rng rng(seed);
  auto g = random_planar(t, seed, 0.2 + 0.1 * static_cast<double>(seed % 7));
  UnitInput in;
  in.t = t;
  std::vector<std::vector<VertexId>> adj(t);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    in.edges.push_back({e, a, b});
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> in_b(t, 0);
  for (VertexId v = 0; v < t; ++v) {
    if (rand_below(rng, 3) != 0) continue;
    bool ok = true;
    for (VertexId w : adj[v]) ok = ok && !in_b[w];
    if (ok) {
      in_b[v] = 1;
      in.border.push_back(v);
    }
  }
  return in;
}

inline std::vector<std::pair<VertexId, VertexId>> random_ops(const UnitInput& in, std::uint64_t seed) {
  Rng rng(seed * 7919 + 1);
  MergeUnit probe(iota_names(in.t), in.border, in.edges);
  std::vector<std::pair<VertexId, VertexId>> ops;
  auto apply = [&](VertexId x, VertexId y) {
    if (rand_below(rng, 2)) std::swap(x, y);
    probe.merge(x, y);
    ops.emplace_back(x, y);
  };
  auto border_reps = [&] {
    std::vector<VertexId> reps;
    for (VertexId b : in.border) reps.push_back(probe.phi(b));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
  };
  std::vector<UnitEdge> order = in.edges;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rand_below(rng, i)]);
    for (const auto& e : order) {
      const VertexId x = probe.phi(e.u), y = probe.phi(e.v);
      if (x == y || probe.find_edge(x, y) == kNoEdge) continue;
      if (rand_below(rng, 8) == 0) {
        auto reps = border_reps();
        if (reps.size() >= 2) {
          const std::size_t i = rand_below(rng, reps.size());
          std::size_t j = rand_below(rng, reps.size() - 1);
          if (j >= i) ++j;
          apply(reps[i], reps[j]);
        }
      }
      if (probe.phi(e.u) != probe.phi(e.v) && probe.find_edge(probe.phi(e.u), probe.phi(e.v)) != kNoEdge) {
        apply(probe.phi(e.u), probe.phi(e.v));
        progress = true;
      }
    }
  }
  for (auto reps = border_reps(); reps.size() >= 2; reps = border_reps()) apply(reps[0], reps[1]);
  return ops;
}

}  // namespace pgc::testing
