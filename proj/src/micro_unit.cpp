#include "pgc/micro_unit.hpp"

#include <algorithm>
#include <mutex>

namespace pgc {

std::uint32_t MicroTable::shape_id(std::size_t t, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& edges,
                                   const std::vector<char>& border) {
  if (t > kMaxVertices) throw UnitError("micro shape too large");
  std::string key;
  key.reserve(1 + t + 2 * edges.size());
  key.push_back(static_cast<char>(t));
  for (std::size_t i = 0; i < t; ++i) key.push_back(border[i] ? '1' : '0');
  for (auto [a, b] : edges) {
    key.push_back(static_cast<char>(a));
    key.push_back(static_cast<char>(b));
  }
  {
    std::shared_lock lock(mutex_);
    auto it = shape_of_key_.find(key);
    if (it != shape_of_key_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = shape_of_key_.find(key);
  if (it != shape_of_key_.end()) return it->second;
  Node root;
  root.phi.resize(t);
  for (std::size_t i = 0; i < t; ++i) root.phi[i] = static_cast<std::uint8_t>(i);
  root.class_size.assign(t, 1);
  root.alive.assign((edges.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) root.alive[i / 64] |= std::uint64_t(1) << (i % 64);
  const auto root_id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(root));
  next_.emplace_back();
  const auto id = static_cast<std::uint32_t>(shapes_.size());
  shapes_.push_back(Shape{t, edges, border, root_id});
  shape_of_key_.emplace(std::move(key), id);
  return id;
}

const MicroTable::Shape& MicroTable::shape(std::uint32_t id) const {
  std::shared_lock lock(mutex_);
  return shapes_.at(id);
}

const MicroTable::Node& MicroTable::node(std::uint32_t id) const {
  std::shared_lock lock(mutex_);
  return nodes_.at(id);
}

std::uint32_t MicroTable::transition(std::uint32_t from, std::uint16_t op) const {
  std::shared_lock lock(mutex_);
  for (auto [o, to] : next_[from])
    if (o == op) return to;
  return kNone;
}

std::uint32_t MicroTable::publish(std::uint32_t from, std::uint16_t op, Node made) {
  std::unique_lock lock(mutex_);
  for (auto [o, to] : next_[from])
    if (o == op) return to;
  if (nodes_.size() >= max_nodes_) return kNone;
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(made));
  next_.emplace_back();
  next_[from].emplace_back(op, id);
  return id;
}

void MicroTable::count(bool hit) { (hit ? hits_ : misses_).fetch_add(1, std::memory_order_relaxed); }

MicroTable::Stats MicroTable::stats() const {
  std::shared_lock lock(mutex_);
  return Stats{shapes_.size(), nodes_.size(), hits_.load(), misses_.load()};
}

MicroUnit::MicroUnit(std::shared_ptr<MicroTable> table, std::vector<VertexId> vertices,
                     const std::vector<VertexId>& border, const std::vector<UnitEdge>& edges)
    : table_(std::move(table)) {
  if (vertices.size() > MicroTable::kMaxVertices)
    throw UnitError("micro unit over its size limit (" + std::to_string(vertices.size()) + " vertices)");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw UnitError("duplicate vertex in unit");
  index_ = LocalIndex(std::move(vertices));
  const std::size_t t = index_.size();
  std::vector<char> border_mask(t, 0);
  for (VertexId b : border) {
    const std::uint32_t i = index_.find(b);
    if (i == LocalIndex::kMissing) throw UnitError("border vertex " + std::to_string(b) + " is not in the unit");
    border_mask[i] = 1;
  }
  struct Local {
    std::uint8_t a, b;
    EdgeId id;
  };
  std::vector<Local> local;
  for (const auto& e : edges) {
    const std::uint32_t a = index_.find(e.u), b = index_.find(e.v);
    if (a == LocalIndex::kMissing || b == LocalIndex::kMissing)
      throw UnitError("edge " + std::to_string(e.id) + " has an endpoint outside the unit");
    if (a == b) throw UnitError("edge " + std::to_string(e.id) + " is a self-loop");
    if (border_mask[a] && border_mask[b]) throw UnitError("edge " + std::to_string(e.id) + " joins two border vertices");
    local.push_back({static_cast<std::uint8_t>(std::min(a, b)), static_cast<std::uint8_t>(std::max(a, b)), e.id});
  }
  std::sort(local.begin(), local.end(), [](const Local& x, const Local& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  std::vector<std::pair<std::uint8_t, std::uint8_t>> shape_edges;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (i > 0 && local[i].a == local[i - 1].a && local[i].b == local[i - 1].b)
      throw UnitError("edge " + std::to_string(local[i].id) + " is parallel to edge " + std::to_string(local[i - 1].id));
    shape_edges.emplace_back(local[i].a, local[i].b);
    edge_ids_.push_back(local[i].id);
  }
  const std::uint32_t sid = table_->shape_id(t, shape_edges, border_mask);
  shape_ = &table_->shape(sid);
  node_id_ = shape_->root;
  node_ = &table_->node(node_id_);
  counters_.created_edges = edge_ids_.size();
}

std::uint8_t MicroUnit::local_rep(VertexId x) const {
  const std::uint32_t i = index_.find(x);
  if (i == LocalIndex::kMissing || current().phi[i] != i)
    throw UnitError("vertex " + std::to_string(x) + " is not a current vertex of the unit");
  return static_cast<std::uint8_t>(i);
}

VertexId MicroUnit::phi(VertexId v0) const {
  const std::uint32_t i = index_.find(v0);
  if (i == LocalIndex::kMissing) throw UnitError("vertex " + std::to_string(v0) + " is not in the unit");
  return index_.name(current().phi[i]);
}

std::vector<VertexId> MicroUnit::phi_inv(VertexId x) const {
  const std::uint8_t r = local_rep(x);
  std::vector<VertexId> out;
  const auto& phi = current().phi;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] == r) out.push_back(index_.name(static_cast<std::uint32_t>(i)));
  return out;
}

void MicroUnit::for_each_member(VertexId x, const std::function<void(VertexId)>& f) const {
  const std::uint8_t r = local_rep(x);
  const auto& phi = current().phi;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] == r) f(index_.name(static_cast<std::uint32_t>(i)));
}

VertexId MicroUnit::absorbed_of(VertexId a, VertexId b) const {
  const std::uint8_t la = local_rep(a), lb = local_rep(b);
  const auto& border = shape_->border;
  const auto& size = current().class_size;
  std::uint8_t absorbed;
  if (border[la] != border[lb])
    absorbed = border[la] ? lb : la;
  else if (size[la] != size[lb])
    absorbed = size[la] < size[lb] ? la : lb;
  else
    absorbed = std::min(la, lb);
  return index_.name(absorbed);
}

MicroTable::Node MicroUnit::step_shadow(std::uint8_t a, std::uint8_t b) {
  const std::size_t t = shape_->t;
  if (!shadow_) {
    std::vector<VertexId> names(t);
    std::vector<VertexId> border;
    for (std::size_t i = 0; i < t; ++i) {
      names[i] = static_cast<VertexId>(i);
      if (shape_->border[i]) border.push_back(static_cast<VertexId>(i));
    }
    std::vector<UnitEdge> edges;
    for (std::size_t i = 0; i < shape_->edges.size(); ++i)
      edges.push_back({static_cast<EdgeId>(i), shape_->edges[i].first, shape_->edges[i].second});
    shadow_ = std::make_unique<MergeUnit>(std::move(names), border, std::move(edges));
    shadow_ops_ = 0;
  }
  for (; shadow_ops_ < ops_.size(); ++shadow_ops_) shadow_->merge(ops_[shadow_ops_] >> 8, ops_[shadow_ops_] & 0xff);
  MergeReport r = shadow_->merge(a, b);
  ++shadow_ops_;

  MicroTable::Node made;
  made.phi.resize(t);
  made.class_size.assign(t, 0);
  for (std::size_t i = 0; i < t; ++i) made.phi[i] = static_cast<std::uint8_t>(shadow_->phi(static_cast<VertexId>(i)));
  for (std::size_t i = 0; i < t; ++i)
    if (made.phi[i] == i) made.class_size[i] = static_cast<std::uint8_t>(shadow_->class_size(static_cast<VertexId>(i)));
  made.alive.assign((shape_->edges.size() + 63) / 64, 0);
  shadow_->for_each_edge([&](EdgeId e, VertexId, VertexId) { made.alive[e / 64] |= std::uint64_t(1) << (e % 64); });
  made.survivor = static_cast<std::uint8_t>(r.survivor);
  made.absorbed = static_cast<std::uint8_t>(r.absorbed);
  for (const auto& p : r.parallelisms)
    made.parallelisms.emplace_back(static_cast<std::uint16_t>(p.from), static_cast<std::uint16_t>(p.to));
  for (const auto& be : r.border_edges)
    made.border_edges.push_back(
        {static_cast<std::uint16_t>(be.edge), static_cast<std::uint8_t>(be.x), static_cast<std::uint8_t>(be.y)});
  return made;
}

MergeReport MicroUnit::merge(VertexId a, VertexId b) {
  const std::uint8_t la = local_rep(a), lb = local_rep(b);
  if (la == lb) throw UnitError("merge of a vertex with itself");
  const auto op = static_cast<std::uint16_t>((std::min(la, lb) << 8) | std::max(la, lb));
  const std::uint32_t next = node_ != nullptr ? table_->transition(node_id_, op) : MicroTable::kNone;
  if (next != MicroTable::kNone) {
    ++counters_.memo_hits;
    table_->count(true);
    node_id_ = next;
    node_ = &table_->node(next);
  } else {
    MicroTable::Node made = step_shadow(std::min(la, lb), std::max(la, lb));
    ++counters_.memo_misses;
    table_->count(false);
    const std::uint32_t id = node_ != nullptr ? table_->publish(node_id_, op, made) : MicroTable::kNone;
    if (id == MicroTable::kNone) {
      detached_ = std::make_unique<MicroTable::Node>(std::move(made));
      node_ = nullptr;
      node_id_ = MicroTable::kNone;
    } else {
      node_id_ = id;
      node_ = &table_->node(id);
    }
  }
  ops_.push_back(op);
  ++counters_.merges;

  const MicroTable::Node& n = current();
  MergeReport report;
  report.survivor = index_.name(n.survivor);
  report.absorbed = index_.name(n.absorbed);
  for (auto [from, to] : n.parallelisms) report.parallelisms.push_back({edge_ids_[from], edge_ids_[to]});
  for (const auto& be : n.border_edges) report.border_edges.push_back({edge_ids_[be.edge], index_.name(be.x), index_.name(be.y)});
  return report;
}

MergeReport MicroUnit::insert_edge(EdgeId, VertexId, VertexId) {
  throw UnitError("micro units take no edge insertions");
}

EdgeId MicroUnit::find_edge(VertexId x, VertexId y) const {
  const std::uint8_t lx = local_rep(x), ly = local_rep(y);
  const MicroTable::Node& n = current();
  for (std::size_t w = 0; w < n.alive.size(); ++w) {
    for (std::uint64_t bits = n.alive[w]; bits != 0; bits &= bits - 1) {
      const std::size_t i = 64 * w + static_cast<std::size_t>(__builtin_ctzll(bits));
      const std::uint8_t a = n.phi[shape_->edges[i].first], b = n.phi[shape_->edges[i].second];
      if ((a == lx && b == ly) || (a == ly && b == lx)) return edge_ids_[i];
    }
  }
  return kNoEdge;
}

void MicroUnit::for_each_edge(const std::function<void(EdgeId, VertexId, VertexId)>& f) const {
  const MicroTable::Node& n = current();
  for (std::size_t w = 0; w < n.alive.size(); ++w) {
    for (std::uint64_t bits = n.alive[w]; bits != 0; bits &= bits - 1) {
      const std::size_t i = 64 * w + static_cast<std::size_t>(__builtin_ctzll(bits));
      f(edge_ids_[i], index_.name(n.phi[shape_->edges[i].first]), index_.name(n.phi[shape_->edges[i].second]));
    }
  }
}

}  // namespace pgc
