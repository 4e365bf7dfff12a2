#include "pgc/oracle.hpp"

#include <algorithm>
#include <string>

namespace pgc {

NaiveContractGraph::NaiveContractGraph(const PlanarMultigraph& g, Direction direction) : direction_(direction) {
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  if (direction_ == Direction::automatic) direction_ = g.has_weights() ? Direction::weighted : Direction::structural;
  if (direction_ == Direction::weighted && !g.has_weights()) throw OracleError("weighted direction needs edge weights");
  if (g.has_weights()) weight_ = g.weights();
  ends_.resize(m);
  label_.resize(n);
  size_.assign(n, 1);
  state_.assign(m, EdgeState::live);
  rep_.resize(m);
  for (VertexId v = 0; v < n; ++v) {
    label_[v] = v;
    adj_[v];
  }
  for (EdgeId e = 0; e < m; ++e) {
    ends_[e] = g.endpoints(e);
    rep_[e] = e;
    const auto [a, b] = ends_[e];
    if (a == b) {
      state_[e] = EdgeState::loop;
      init_.self_loops.push_back(e);
      continue;
    }
    auto& cls = adj_[a][b];
    if (!cls.empty()) {
      EdgeId rep = rep_[cls.front()];
      if (direction_ == Direction::weighted && key_less(e, rep)) {
        init_.parallelisms.push_back({rep, e});
        for (EdgeId f : cls) rep_[f] = e;
      } else {
        init_.parallelisms.push_back({e, rep});
        rep_[e] = rep;
      }
    }
    cls.push_back(e);
    adj_[b][a] = cls;
  }
  std::sort(init_.parallelisms.begin(), init_.parallelisms.end());
}

bool NaiveContractGraph::key_less(EdgeId a, EdgeId b) const {
  if (direction_ == Direction::weighted && weight_[a] != weight_[b]) return weight_[a] < weight_[b];
  return a < b;
}

ContractReport NaiveContractGraph::contract(EdgeId e) {
  if (e >= state_.size()) throw OracleError("unknown edge " + std::to_string(e));
  if (state_[e] != EdgeState::live) throw OracleError("edge " + std::to_string(e) + " is not live");
  const VertexId pu = label_[ends_[e].first], pv = label_[ends_[e].second];
  const bool u_survives = size_[pu] != size_[pv] ? size_[pu] > size_[pv] : pu > pv;
  const VertexId ps = u_survives ? pu : pv, pa = u_survives ? pv : pu;

  ContractReport report;
  report.survivor = ps;
  for (EdgeId f : adj_[pu][pv]) {
    if (f == e) {
      state_[f] = EdgeState::contracted;
    } else {
      state_[f] = EdgeState::loop;
      report.self_loops.push_back(f);
    }
  }
  adj_[ps].erase(pa);
  auto absorbed = std::move(adj_[pa]);
  adj_.erase(pa);
  absorbed.erase(ps);

  for (auto& [x, cls] : absorbed) {
    adj_[x].erase(pa);
    auto it = adj_[ps].find(x);
    if (it == adj_[ps].end()) {
      adj_[ps][x] = cls;
      adj_[x][ps] = cls;
      continue;
    }
    auto& keep = it->second;
    const EdgeId ra = rep_[cls.front()], rs = rep_[keep.front()];
    bool survivor_wins;
    if (direction_ == Direction::structural)
      survivor_wins = true;
    else
      survivor_wins = key_less(rs, ra);
    const EdgeId child = survivor_wins ? ra : rs, winner = survivor_wins ? rs : ra;
    report.parallelisms.push_back({child, winner});
    keep.insert(keep.end(), cls.begin(), cls.end());
    for (EdgeId f : keep) rep_[f] = winner;
    adj_[x][ps] = keep;
  }

  for (auto& l : label_)
    if (l == pa) l = ps;
  size_[ps] += size_[pa];
  std::sort(report.parallelisms.begin(), report.parallelisms.end());
  std::sort(report.self_loops.begin(), report.self_loops.end());
  return report;
}

std::pair<VertexId, VertexId> NaiveContractGraph::vertices(EdgeId e) const {
  if (state_.at(e) == EdgeState::contracted) throw OracleError("edge " + std::to_string(e) + " was contracted");
  return {label_[ends_[e].first], label_[ends_[e].second]};
}

EdgeId NaiveContractGraph::edge(VertexId u, VertexId v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return kNoEdge;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? kNoEdge : rep_[jt->second.front()];
}

std::vector<std::pair<VertexId, EdgeId>> NaiveContractGraph::neighbors(VertexId u) const {
  std::vector<std::pair<VertexId, EdgeId>> out;
  for (const auto& [x, cls] : adj_.at(u)) out.emplace_back(x, rep_[cls.front()]);
  return out;
}

std::vector<EdgeId> NaiveContractGraph::parallel_class(EdgeId e) const {
  if (state_.at(e) != EdgeState::live) throw OracleError("edge " + std::to_string(e) + " is not live");
  auto [a, b] = vertices(e);
  auto cls = adj_.at(a).at(b);
  std::sort(cls.begin(), cls.end());
  return cls;
}

std::vector<VertexId> NaiveContractGraph::live_vertices() const {
  std::vector<VertexId> out;
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::size_t NaiveContractGraph::num_simple_edges() const {
  std::size_t total = 0;
  for (const auto& [v, nb] : adj_) total += nb.size();
  return total / 2;
}

}  // namespace pgc
