#include "pgc/merge_unit.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <tuple>

namespace pgc {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

Instrumentation& Instrumentation::operator+=(const Instrumentation& o) {
  endpoint_updates += o.endpoint_updates;
  promotions += o.promotions;
  fresh_insertions += o.fresh_insertions;
  total_insertions += o.total_insertions;
  created_edges += o.created_edges;
  merges += o.merges;
  memo_hits += o.memo_hits;
  memo_misses += o.memo_misses;
  max_edge_updates = std::max(max_edge_updates, o.max_edge_updates);
  duplicate_insertions += o.duplicate_insertions;
  return *this;
}

LocalIndex::LocalIndex(std::vector<VertexId> sorted_names) : names_(std::move(sorted_names)) {
  if (names_.empty()) return;
  base_ = names_.front();
  const std::size_t span = std::size_t(names_.back()) - base_ + 1;
  if (span <= 4 * names_.size() + 64) {
    dense_.assign(span, kMissing);
    for (std::uint32_t i = 0; i < names_.size(); ++i) dense_[names_[i] - base_] = i;
  }
}

std::uint32_t LocalIndex::find(VertexId v) const {
  if (!dense_.empty()) {
    if (v < base_ || std::size_t(v - base_) >= dense_.size()) return kMissing;
    return dense_[v - base_];
  }
  auto it = std::lower_bound(names_.begin(), names_.end(), v);
  return (it != names_.end() && *it == v) ? static_cast<std::uint32_t>(it - names_.begin()) : kMissing;
}

MergeUnit::MergeUnit(std::vector<VertexId> vertices, const std::vector<VertexId>& border, std::vector<UnitEdge> edges)
    : dict_(edges.size()) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw UnitError("duplicate vertex in unit");
  index_ = LocalIndex(std::move(vertices));
  const std::size_t n = index_.size();
  phi_.resize(n);
  next_member_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) phi_[i] = next_member_[i] = i;
  class_size_.assign(n, 1);
  border_.assign(n, 0);
  alive_.assign(n, 1);
  head_.assign(n, kNone);
  for (VertexId b : border) {
    const std::uint32_t i = index_.find(b);
    if (i == LocalIndex::kMissing) throw UnitError("border vertex " + std::to_string(b) + " is not in the unit");
    border_[i] = 1;
  }

  struct Local {
    std::uint32_t a, b;
    EdgeId id;
  };
  std::vector<Local> local;
  local.reserve(edges.size());
  for (const auto& e : edges) {
    const std::uint32_t a = index_.find(e.u), b = index_.find(e.v);
    if (a == LocalIndex::kMissing || b == LocalIndex::kMissing)
      throw UnitError("edge " + std::to_string(e.id) + " has an endpoint outside the unit");
    if (a == b) throw UnitError("edge " + std::to_string(e.id) + " is a self-loop");
    if (border_[a] && border_[b]) throw UnitError("edge " + std::to_string(e.id) + " joins two border vertices");
    local.push_back({std::min(a, b), std::max(a, b), e.id});
  }
  std::sort(local.begin(), local.end(),
            [](const Local& x, const Local& y) { return std::tie(x.a, x.b, x.id) < std::tie(y.a, y.b, y.id); });
  records_.reserve(local.size());
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (i > 0 && local[i].a == local[i - 1].a && local[i].b == local[i - 1].b)
      throw UnitError("edge " + std::to_string(local[i].id) + " is parallel to edge " + std::to_string(local[i - 1].id));
    add_record(local[i].id, local[i].a, local[i].b);
  }
  counters_.created_edges = local.size();
}

std::uint32_t MergeUnit::local_rep(VertexId x) const {
  const std::uint32_t i = index_.find(x);
  if (i == LocalIndex::kMissing || phi_[i] != i)
    throw UnitError("vertex " + std::to_string(x) + " is not a current vertex of the unit");
  return i;
}

VertexId MergeUnit::phi(VertexId v0) const {
  const std::uint32_t i = index_.find(v0);
  if (i == LocalIndex::kMissing) throw UnitError("vertex " + std::to_string(v0) + " is not in the unit");
  return index_.name(phi_[i]);
}

std::vector<VertexId> MergeUnit::phi_inv(VertexId x) const {
  const std::uint32_t r = local_rep(x);
  std::vector<VertexId> out;
  out.reserve(class_size_[r]);
  std::uint32_t m = r;
  do {
    out.push_back(index_.name(m));
    m = next_member_[m];
  } while (m != r);
  return out;
}

void MergeUnit::for_each_member(VertexId x, const std::function<void(VertexId)>& f) const {
  const std::uint32_t r = local_rep(x);
  std::uint32_t m = r;
  do {
    f(index_.name(m));
    m = next_member_[m];
  } while (m != r);
}

std::uint32_t MergeUnit::absorbed_local(std::uint32_t a, std::uint32_t b) const {
  if (border_[a] != border_[b]) return border_[a] ? b : a;
  if (class_size_[a] != class_size_[b]) return class_size_[a] < class_size_[b] ? a : b;
  return a < b ? a : b;
}

VertexId MergeUnit::absorbed_of(VertexId a, VertexId b) const {
  return index_.name(absorbed_local(local_rep(a), local_rep(b)));
}

std::uint32_t MergeUnit::add_record(EdgeId id, std::uint32_t a, std::uint32_t b) {
  std::uint32_t rec;
  if (!free_records_.empty()) {
    rec = free_records_.back();
    free_records_.pop_back();
  } else {
    rec = static_cast<std::uint32_t>(records_.size());
    records_.emplace_back();
    slot_prev_.resize(2 * records_.size());
    slot_next_.resize(2 * records_.size());
  }
  records_[rec] = Record{{a, b}, id, 0};
  link(2 * rec, a);
  link(2 * rec + 1, b);
  dict_.insert(PairMap::key(a, b), rec);
  return rec;
}

void MergeUnit::link(std::uint32_t slot, std::uint32_t vertex) {
  slot_prev_[slot] = kNone;
  slot_next_[slot] = head_[vertex];
  if (head_[vertex] != kNone) slot_prev_[head_[vertex]] = slot;
  head_[vertex] = slot;
}

void MergeUnit::unlink(std::uint32_t slot) {
  const std::uint32_t vertex = records_[slot / 2].end[slot & 1];
  if (slot_prev_[slot] != kNone)
    slot_next_[slot_prev_[slot]] = slot_next_[slot];
  else
    head_[vertex] = slot_next_[slot];
  if (slot_next_[slot] != kNone) slot_prev_[slot_next_[slot]] = slot_prev_[slot];
}

void MergeUnit::drop_record(std::uint32_t rec) {
  unlink(2 * rec);
  unlink(2 * rec + 1);
  dict_.erase(PairMap::key(records_[rec].end[0], records_[rec].end[1]));
  records_[rec].id = kNoEdge;
  free_records_.push_back(rec);
}

MergeReport MergeUnit::merge(VertexId a, VertexId b) {
  const std::uint32_t la = local_rep(a), lb = local_rep(b);
  if (la == lb) throw UnitError("merge of a vertex with itself");
  const std::uint32_t u = absorbed_local(la, lb);
  const std::uint32_t v = u == la ? lb : la;
  const std::uint32_t direct = dict_.find(PairMap::key(u, v));
  if (direct == PairMap::kMissing && !(border_[u] && border_[v]))
    throw UnitError("merge of non-adjacent vertices " + std::to_string(a) + " and " + std::to_string(b));

  MergeReport report;
  report.survivor = index_.name(v);
  report.absorbed = index_.name(u);
  if (direct != PairMap::kMissing) drop_record(direct);

  const bool promotion = !border_[u] && border_[v];
  for (std::uint32_t s = head_[u]; s != kNone;) {
    const std::uint32_t after = slot_next_[s];
    const std::uint32_t rec = s / 2;
    const std::uint32_t side = s & 1;
    const std::uint32_t x = records_[rec].end[side ^ 1];
    const std::uint32_t existing = dict_.find(PairMap::key(v, x));
    if (existing != PairMap::kMissing) {
      report.parallelisms.push_back({records_[rec].id, records_[existing].id});
      drop_record(rec);
    } else if (border_[v] && border_[x]) {
      report.border_edges.push_back({records_[rec].id, index_.name(v), index_.name(x)});
      drop_record(rec);
    } else {
      dict_.erase(PairMap::key(u, x));
      dict_.insert(PairMap::key(v, x), rec);
      unlink(s);
      records_[rec].end[side] = v;
      link(s, v);
      if (promotion) {
        ++counters_.promotions;
      } else {
        ++counters_.endpoint_updates;
        counters_.max_edge_updates = std::max(counters_.max_edge_updates, ++records_[rec].updates);
      }
    }
    s = after;
  }
  head_[u] = kNone;

  std::uint32_t m = u;
  do {
    phi_[m] = v;
    m = next_member_[m];
  } while (m != u);
  std::swap(next_member_[u], next_member_[v]);
  class_size_[v] += class_size_[u];
  border_[v] = border_[v] || border_[u];
  alive_[u] = 0;
  ++counters_.merges;
  return report;
}

MergeReport MergeUnit::insert_edge(EdgeId e, VertexId x, VertexId y) {
  const std::uint32_t lx = local_rep(x), ly = local_rep(y);
  if (lx == ly) throw UnitError("inserted edge " + std::to_string(e) + " is a self-loop");
  ++counters_.total_insertions;
  if (!inserted_.insert(e).second) ++counters_.duplicate_insertions;
  MergeReport report;
  const std::uint32_t existing = dict_.find(PairMap::key(lx, ly));
  if (border_[lx] && border_[ly]) {
    report.border_edges.push_back({e, x, y});
  } else if (existing != PairMap::kMissing) {
    report.parallelisms.push_back({e, records_[existing].id});
  } else {
    add_record(e, lx, ly);
    ++counters_.fresh_insertions;
    ++counters_.created_edges;
  }
  return report;
}

EdgeId MergeUnit::find_edge(VertexId x, VertexId y) const {
  const std::uint32_t rec = dict_.find(PairMap::key(local_rep(x), local_rep(y)));
  return rec == PairMap::kMissing ? kNoEdge : records_[rec].id;
}

void MergeUnit::for_each_edge(const std::function<void(EdgeId, VertexId, VertexId)>& f) const {
  dict_.for_each([&](std::uint64_t, std::uint32_t rec) {
    f(records_[rec].id, index_.name(records_[rec].end[0]), index_.name(records_[rec].end[1]));
  });
}

void MergeUnit::check_invariants() const {
  std::size_t slots = 0;
  for (std::uint32_t x = 0; x < index_.size(); ++x) {
    if (!alive_[x]) {
      if (head_[x] != kNone) throw UnitError("absorbed vertex keeps edges");
      continue;
    }
    for (std::uint32_t s = head_[x]; s != kNone; s = slot_next_[s]) {
      ++slots;
      const Record& r = records_[s / 2];
      if (r.end[s & 1] != x) throw UnitError("slot listed at the wrong vertex");
      const std::uint32_t y = r.end[(s & 1) ^ 1];
      if (!alive_[y]) throw UnitError("edge " + std::to_string(r.id) + " touches an absorbed vertex");
      if (y == x) throw UnitError("self-loop " + std::to_string(r.id));
      if (border_[x] && border_[y]) throw UnitError("edge " + std::to_string(r.id) + " joins two border vertices");
      if (dict_.find(PairMap::key(x, y)) != s / 2) throw UnitError("dictionary disagrees with the neighbor lists");
    }
  }
  if (slots != 2 * dict_.size()) throw UnitError("dictionary holds extra pairs");
  std::vector<std::uint32_t> members(index_.size(), 0);
  for (std::uint32_t i = 0; i < index_.size(); ++i) {
    const std::uint32_t r = phi_[i];
    if (!alive_[r] || phi_[r] != r) throw UnitError("phi maps to a dead vertex");
    ++members[r];
  }
  for (std::uint32_t r = 0; r < index_.size(); ++r) {
    if (!alive_[r]) continue;
    std::uint32_t count = 0, m = r;
    do {
      if (phi_[m] != r) throw UnitError("member list crosses classes");
      ++count;
      m = next_member_[m];
    } while (m != r);
    if (count != members[r] || count != class_size_[r]) throw UnitError("class sizes disagree");
  }
}

void MergeUnit::dump(std::ostream& out) const {
  std::vector<std::tuple<VertexId, VertexId, EdgeId>> rows;
  for_each_edge([&](EdgeId e, VertexId x, VertexId y) { rows.emplace_back(std::min(x, y), std::max(x, y), e); });
  std::sort(rows.begin(), rows.end());
  for (auto [x, y, e] : rows) out << "edge " << x << ' ' << y << " alpha " << e << '\n';
  for (std::uint32_t i = 0; i < index_.size(); ++i)
    out << "phi " << index_.name(i) << ' ' << index_.name(phi_[i]) << (border_[phi_[i]] ? " border" : "") << '\n';
}

}  // namespace pgc
