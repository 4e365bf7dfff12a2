#include "pgc/component_tracker.hpp"

#include <string>

namespace pgc {

SearchComponentTracker::SearchComponentTracker(const PlanarMultigraph& g, const std::vector<char>& present)
    : g_(&g), present_(present.empty() ? std::vector<char>(g.num_edges(), 1) : present) {
  const std::size_t n = g.num_vertices();
  comp_.assign(n, kNoVertex);
  mark_.assign(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (comp_[s] != kNoVertex) continue;
    const auto id = static_cast<std::uint32_t>(size_.size());
    size_.push_back(0);
    std::vector<VertexId> stack{s};
    comp_[s] = id;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size_[id];
      for (Dart d : g.darts(v)) {
        if (!present_[edge_of(d)]) continue;
        const VertexId w = g.head(d);
        if (comp_[w] == kNoVertex) {
          comp_[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
}

bool SearchComponentTracker::advance(Search& s, std::uint32_t stamp, std::uint32_t other, bool& met) {
  while (s.head < s.seen.size()) {
    const VertexId v = s.seen[s.head];
    const auto& ds = g_->darts(v);
    while (s.dart < ds.size()) {
      const Dart d = ds[s.dart++];
      if (!present_[edge_of(d)]) continue;
      const VertexId w = g_->head(d);
      if (mark_[w] == other) {
        met = true;
        return false;
      }
      if (mark_[w] != stamp) {
        mark_[w] = stamp;
        s.seen.push_back(w);
      }
      return true;
    }
    ++s.head;
    s.dart = 0;
  }
  s.done = true;
  return false;
}

void SearchComponentTracker::delete_edge(EdgeId e) {
  if (e >= present_.size()) throw std::out_of_range("unknown edge " + std::to_string(e));
  if (!present_[e]) throw std::logic_error("edge " + std::to_string(e) + " was already deleted");
  present_[e] = 0;
  const auto [u, v] = g_->endpoints(e);
  if (u == v) return;
  const std::uint32_t su = ++stamp_, sv = ++stamp_;
  Search a, b;
  a.seen.push_back(u);
  b.seen.push_back(v);
  mark_[u] = su;
  if (mark_[v] == su) return;
  mark_[v] = sv;
  bool met = false;
  for (;;) {
    advance(a, su, sv, met);
    if (met) return;
    if (a.done) break;
    advance(b, sv, su, met);
    if (met) return;
    if (b.done) break;
  }
  const Search& small = a.done ? a : b;
  const auto id = static_cast<std::uint32_t>(size_.size());
  size_.push_back(small.seen.size());
  size_[comp_[u]] -= small.seen.size();
  for (VertexId w : small.seen) comp_[w] = id;
}

}  // namespace pgc
