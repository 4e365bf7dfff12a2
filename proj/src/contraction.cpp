#include "pgc/contraction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "pgc/embedding.hpp"
#include "pgc/partition.hpp"

namespace pgc {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// (child node, vertex) -> vertex, hashed or ordered.
class Gamma {
 public:
  explicit Gamma(bool ordered) : ordered_(ordered) {}
  static std::uint64_t key(std::uint32_t child, VertexId x) { return (std::uint64_t(child) << 32) | x; }

  std::uint32_t find(std::uint64_t k) const {
    if (!ordered_) return hashed_.find(k);
    auto it = tree_.find(k);
    return it == tree_.end() ? PairMap::kMissing : it->second;
  }
  void assign(std::uint64_t k, std::uint32_t v) {
    if (ordered_)
      tree_[k] = v;
    else
      hashed_.assign(k, v);
  }
  void erase(std::uint64_t k) {
    if (ordered_)
      tree_.erase(k);
    else
      hashed_.erase(k);
  }
  std::size_t memory_bytes() const { return ordered_ ? tree_.size() * 48 : hashed_.memory_bytes(); }

 private:
  bool ordered_;
  PairMap hashed_;
  std::map<std::uint64_t, std::uint32_t> tree_;
};

std::vector<VertexId> sorted_union(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

struct ContractionStructure::Node {
  std::uint32_t parent = kNone;
  std::uint32_t level = 0;
  LocalIndex index;
  std::vector<char> ancestor;  // by local index: member of AV_D
  std::unique_ptr<VertexMerger> unit;
  bool micro = false;
  std::vector<VertexId> beta;  // by local index of a border representative
  std::vector<std::uint32_t> child_off;
  std::vector<std::uint32_t> child_list;  // children holding the vertex, CSR by local index
  Gamma gamma;

  explicit Node(bool ordered) : gamma(ordered) {}
};

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::automatic: return "auto";
    case Mode::naive: return "naive";
    case Mode::two_level: return "two-level";
    case Mode::three_level: return "three-level";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& s) {
  for (Mode m : {Mode::automatic, Mode::naive, Mode::two_level, Mode::three_level})
    if (mode_name(m) == s) return m;
  return std::nullopt;
}

ContractionStructure::~ContractionStructure() = default;

ContractionStructure::ContractionStructure(const PlanarMultigraph& input, ContractConfig config) {
  std::optional<PlanarMultigraph> embedded;
  const PlanarMultigraph* g = &input;
  if (!input.embedded()) {
    embedded = embed(input);
    if (!embedded) throw ContractError("graph is not planar");
    g = &*embedded;
  }
  const std::size_t n = g->num_vertices(), m = g->num_edges();

  direction_ = config.direction;
  if (direction_ == Direction::automatic) direction_ = g->has_weights() ? Direction::weighted : Direction::structural;
  if (direction_ == Direction::weighted && !g->has_weights())
    throw ContractError("weighted direction needs edge weights");
  if (g->has_weights()) weight_ = g->weights();
  dictionary_ = config.dictionary;
  table_ = config.micro_table ? config.micro_table : std::make_shared<MicroTable>();

  ends_.resize(m);
  for (EdgeId e = 0; e < m; ++e) ends_[e] = g->endpoints(e);
  edge_state_.assign(m, EdgeState::live);
  forest_parent_.assign(m, kNoEdge);
  first_child_.assign(m, kNoEdge);
  next_sibling_.assign(m, kNoEdge);
  dsu_.resize(m);
  std::iota(dsu_.begin(), dsu_.end(), 0);
  dsu_size_.assign(m, 1);
  class_rep_ = dsu_;
  class_internal_.assign(m, kNoEdge);
  vertex_alive_.assign(n, 1);
  vertex_size_.assign(n, 1);
  degree_.assign(n, 0);
  live_vertices_ = n;

  SimpleView view = simplify(*g);
  for (EdgeId e : view.loops) {
    edge_state_[e] = EdgeState::loop;
    init_report_.self_loops.push_back(e);
  }
  {
    auto groups = view.parallelisms;
    std::sort(groups.begin(), groups.end(),
              [](const Parallelism& a, const Parallelism& b) { return std::tie(a.to, a.from) < std::tie(b.to, b.from); });
    EdgeId rep = kNoEdge;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i == 0 || groups[i].to != groups[i - 1].to) rep = groups[i].to;
      const EdgeId e = groups[i].from;
      if (direction_ == Direction::weighted && key_less(e, rep)) {
        init_report_.parallelisms.push_back({rep, e});
        join_classes(rep, e, kNoEdge);
        rep = e;
      } else {
        init_report_.parallelisms.push_back({e, rep});
        join_classes(e, rep, kNoEdge);
      }
    }
  }

  mode_ = config.mode;
  if (mode_ == Mode::automatic && top_parameter(n) >= n) mode_ = Mode::naive;

  if (mode_ == Mode::naive) {
    public_of_h_ = view.origin;
    h_ends_.resize(view.graph.num_edges());
    for (EdgeId h = 0; h < h_ends_.size(); ++h) h_ends_[h] = view.graph.endpoints(h);
    build_units(view.graph, config);
  } else {
    DegreeReduction red = reduce_degree(*g);
    const PlanarMultigraph& h = red.reduced;
    const std::size_t nh = h.num_vertices();
    if (mode_ == Mode::automatic) {
      r1_ = config.r1.value_or(top_parameter(nh));
      r2_ = config.r2.value_or(sub_parameter(r1_));
      mode_ = r2_ >= r1_ ? Mode::two_level : Mode::three_level;
    } else {
      const auto desk_r1 = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(std::cbrt(double(nh) * nh))));
      r1_ = config.r1.value_or(desk_r1);
      r2_ = config.r2.value_or(std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(std::sqrt(double(r1_))))));
    }
    public_of_h_ = red.edge_origin;
    h_ends_.resize(h.num_edges());
    for (EdgeId e = 0; e < h_ends_.size(); ++e) h_ends_[e] = h.endpoints(e);
    build_units(h, config);

    initializing_ = true;
    for (EdgeId c : red.cycle_edges) {
      const auto [a, b] = h_ends_[c];
      const Place pa = resolve(a), pb = resolve(b);
      if (pa.x == pb.x) continue;
      events_.clear();
      merge_internal(a, b);
      for (const Event& ev : events_)
        if (public_of_h_[ev.from] != kNoEdge || public_of_h_[ev.to] != kNoEdge)
          throw ContractError("cycle contraction touched an input edge");
    }
    initializing_ = false;
  }

  for (EdgeId h = 0; h < public_of_h_.size(); ++h)
    if (public_of_h_[h] != kNoEdge) class_internal_[find_class(public_of_h_[h])] = h;

  public_of_internal_.assign(leaf_of_.size(), kNoVertex);
  internal_of_public_.assign(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId x = resolve(v).x;
    public_of_internal_[x] = v;
    internal_of_public_[v] = x;
  }

  list_next_.resize(2 * m + n);
  list_prev_.resize(2 * m + n);
  for (std::uint32_t s = 0; s < list_next_.size(); ++s) list_next_[s] = list_prev_[s] = s;
  for (EdgeId e = 0; e < m; ++e) {
    if (edge_state_[e] != EdgeState::live || class_rep_[find_class(e)] != e) continue;
    list_push(2 * e, ends_[e].first);
    list_push(2 * e + 1, ends_[e].second);
    ++degree_[ends_[e].first];
    ++degree_[ends_[e].second];
    ++simple_edges_;
  }
}

void ContractionStructure::build_units(const PlanarMultigraph& h, const ContractConfig& config) {
  const std::size_t nh = h.num_vertices();
  struct UnitPlan {
    std::uint32_t parent = kNone;
    std::uint32_t level = 0;
    std::vector<VertexId> vertices;
    std::vector<VertexId> ancestors;
    std::vector<UnitEdge> edges;
  };
  std::vector<UnitPlan> plans;
  std::vector<std::uint32_t> leaf_specs;

  if (mode_ == Mode::naive) {
    UnitPlan s;
    for (VertexId v = 0; v < nh; ++v)
      if (h.degree(v) > 0) s.vertices.push_back(v);
    for (EdgeId e = 0; e < h.num_edges(); ++e) s.edges.push_back({e, h.endpoints(e).first, h.endpoints(e).second});
    plans.push_back(std::move(s));
    leaf_specs.push_back(0);
  } else {
    std::vector<char> in_root(nh, 0);
    std::vector<std::uint32_t> in_mid(nh, kNone);
    auto place = [&](EdgeId e, std::uint32_t mid, std::uint32_t leaf) {
      const auto [a, b] = h.endpoints(e);
      std::uint32_t target = leaf;
      if (in_root[a] && in_root[b])
        target = 0;
      else if (mid != kNone && in_mid[a] == mid && in_mid[b] == mid)
        target = mid;
      plans[target].edges.push_back({e, a, b});
    };

    if (mode_ == Mode::two_level) {
      const RDivision div = r_division(h, r1_, config.slack);
      plans.emplace_back();
      for (const auto& p : div.pieces) plans[0].vertices = sorted_union(std::move(plans[0].vertices), p.boundary);
      for (VertexId v : plans[0].vertices) in_root[v] = 1;
      for (const auto& p : div.pieces) {
        const auto id = static_cast<std::uint32_t>(plans.size());
        plans.push_back(UnitPlan{0, 1, p.vertices, p.boundary, {}});
        leaf_specs.push_back(id);
        for (EdgeId e : p.edges) place(e, kNone, id);
      }
    } else {
      const NestedDivision nd = nested_division(h, config.slack, r1_, r2_);
      plans.emplace_back();
      for (const auto& p : nd.top.pieces) plans[0].vertices = sorted_union(std::move(plans[0].vertices), p.boundary);
      for (VertexId v : plans[0].vertices) in_root[v] = 1;
      for (std::size_t i = 0; i < nd.top.pieces.size(); ++i) {
        const Piece& top = nd.top.pieces[i];
        const auto mid = static_cast<std::uint32_t>(plans.size());
        std::vector<VertexId> vs = top.boundary;
        for (const auto& sp : nd.sub[i].pieces) vs = sorted_union(std::move(vs), sp.boundary);
        for (VertexId v : vs) in_mid[v] = mid;
        plans.push_back(UnitPlan{0, 1, vs, top.boundary, {}});
        for (const auto& sp : nd.sub[i].pieces) {
          const auto leaf = static_cast<std::uint32_t>(plans.size());
          std::vector<VertexId> av;
          for (VertexId v : sp.vertices)
            if (in_mid[v] == mid) av.push_back(v);
          plans.push_back(UnitPlan{mid, 2, sp.vertices, std::move(av), {}});
          leaf_specs.push_back(leaf);
          for (EdgeId e : sp.edges) place(e, mid, leaf);
        }
      }
    }
  }

  leaf_of_.assign(nh, kNone);
  home_of_.assign(nh, kNone);
  const bool ordered = config.dictionary == Dictionary::ordered;
  const std::size_t micro_cap = std::min(config.micro_threshold, MicroTable::kMaxVertices);
  for (std::uint32_t id = 0; id < plans.size(); ++id) {
    UnitPlan& s = plans[id];
    auto node = std::make_unique<Node>(ordered);
    node->parent = s.parent;
    node->level = s.level;
    node->index = LocalIndex(s.vertices);
    node->ancestor.assign(s.vertices.size(), 0);
    for (VertexId v : s.ancestors) node->ancestor[node->index.find(v)] = 1;
    node->beta.assign(s.vertices.size(), kNoVertex);
    for (VertexId v : s.ancestors) node->beta[node->index.find(v)] = v;
    for (std::uint32_t i = 0; i < s.vertices.size(); ++i)
      if (!node->ancestor[i]) home_of_[s.vertices[i]] = id;
    node->micro = s.level == 2 && s.vertices.size() <= micro_cap;
    if (node->micro)
      node->unit = std::make_unique<MicroUnit>(table_, s.vertices, s.ancestors, s.edges);
    else
      node->unit = std::make_unique<MergeUnit>(s.vertices, s.ancestors, std::move(s.edges));
    nodes_.push_back(std::move(node));
  }
  for (std::uint32_t id : leaf_specs)
    for (VertexId v : plans[id].vertices)
      if (leaf_of_[v] == kNone) leaf_of_[v] = id;

  for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
    Node& d = *nodes_[id];
    std::vector<std::uint32_t> count(d.index.size() + 1, 0);
    std::vector<std::uint32_t> kids;
    for (std::uint32_t c = 0; c < plans.size(); ++c)
      if (plans[c].parent == id && c != id) kids.push_back(c);
    for (std::uint32_t c : kids)
      for (VertexId v : plans[c].ancestors) ++count[d.index.find(v) + 1];
    if (kids.empty()) continue;
    for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    d.child_off = count;
    d.child_list.resize(count.back());
    for (std::uint32_t c : kids) {
      for (VertexId v : plans[c].ancestors) {
        d.child_list[count[d.index.find(v)]++] = c;
        d.gamma.assign(Gamma::key(c, v), v);
      }
    }
  }
}

VertexId ContractionStructure::beta(std::uint32_t node, VertexId x) const {
  const Node& d = *nodes_[node];
  return d.beta[d.index.find(x)];
}

ContractionStructure::Place ContractionStructure::resolve(VertexId v0) const {
  std::uint32_t node = leaf_of_[v0];
  if (node == kNone) return {kNone, v0};
  VertexId x = nodes_[node]->unit->phi(v0);
  while (nodes_[node]->parent != kNone && nodes_[node]->unit->is_border(x)) {
    x = beta(node, x);
    node = nodes_[node]->parent;
  }
  return {node, x};
}

VertexId ContractionStructure::translate_down(std::uint32_t from, VertexId x, std::uint32_t to) const {
  std::array<std::uint32_t, 4> path{};
  std::size_t len = 0;
  for (std::uint32_t d = to; d != from; d = nodes_[d]->parent) {
    if (d == kNone || len == path.size()) return kNoVertex;
    path[len++] = d;
  }
  for (std::size_t i = len; i-- > 0;) {
    const std::uint32_t y = nodes_[from]->gamma.find(Gamma::key(path[i], x));
    if (y == PairMap::kMissing) return kNoVertex;
    x = y;
    from = path[i];
  }
  return x;
}

EdgeId ContractionStructure::internal_edge(VertexId x, VertexId y) const {
  std::uint32_t a = home_of_[x], b = home_of_[y];
  if (a == kNone || b == kNone) return kNoEdge;
  if (nodes_[a]->level < nodes_[b]->level) {
    std::swap(a, b);
    std::swap(x, y);
  }
  const VertexId y2 = translate_down(b, y, a);
  if (y2 == kNoVertex) return kNoEdge;
  return nodes_[a]->unit->find_edge(x, y2);
}

void ContractionStructure::merge_internal(VertexId a0, VertexId b0) {
  const Place pa = resolve(a0), pb = resolve(b0);
  if (pa.node == kNone || pb.node == kNone || pa.x == pb.x) throw ContractError("merge of a vertex with itself");
  const bool first_deeper = nodes_[pa.node]->level >= nodes_[pb.node]->level;
  const Place& deep = first_deeper ? pa : pb;
  const Place& shallow = first_deeper ? pb : pa;
  const VertexId y = translate_down(shallow.node, shallow.x, deep.node);
  if (y == kNoVertex) throw ContractError("endpoints are not represented in a common unit");
  if (first_deeper)
    merge_in(deep.node, deep.x, y);
  else
    merge_in(deep.node, y, deep.x);
}

void ContractionStructure::merge_in(std::uint32_t node, VertexId x_first, VertexId x_second) {
  Node& d = *nodes_[node];
  const VertexId absorbed = d.unit->absorbed_of(x_first, x_second);
  const bool absorbed_first = absorbed == x_first;

  std::vector<std::pair<std::uint32_t, VertexId>> moved;
  if (!d.child_off.empty()) {
    d.unit->for_each_member(absorbed, [&](VertexId w) {
      const std::uint32_t lw = d.index.find(w);
      for (std::uint32_t i = d.child_off[lw]; i < d.child_off[lw + 1]; ++i) {
        const std::uint32_t c = d.child_list[i];
        const std::uint64_t k = Gamma::key(c, absorbed);
        const std::uint32_t y = d.gamma.find(k);
        if (y == PairMap::kMissing) continue;
        moved.emplace_back(c, y);
        d.gamma.erase(k);
      }
    });
  }

  const MergeReport rep = d.unit->merge(x_first, x_second);
  const VertexId s = rep.survivor;
  for (const auto& p : rep.parallelisms) events_.push_back({p.from, p.to, absorbed_first});
  for (const auto& be : rep.border_edges) {
    if (d.parent == kNone) throw ContractError("border edge reported by the root unit");
    insert_up(d.parent, be.edge, beta(node, be.x), beta(node, be.y), absorbed_first);
  }

  for (auto [c, xa] : moved) {
    Node& child = *nodes_[c];
    child.beta[child.index.find(xa)] = s;
    const std::uint64_t k = Gamma::key(c, s);
    const std::uint32_t ys = d.gamma.find(k);
    if (ys == PairMap::kMissing) {
      d.gamma.assign(k, xa);
      continue;
    }
    if (absorbed_first)
      merge_in(c, xa, ys);
    else
      merge_in(c, ys, xa);
    const VertexId sc = child.unit->phi(xa);
    child.beta[child.index.find(sc)] = s;
    d.gamma.assign(k, sc);
  }
}

void ContractionStructure::insert_up(std::uint32_t node, EdgeId e, VertexId x, VertexId y, bool from_first) {
  Node& d = *nodes_[node];
  const MergeReport rep = d.unit->insert_edge(e, x, y);
  for (const auto& p : rep.parallelisms) events_.push_back({p.from, p.to, from_first});
  if (!rep.border_edges.empty()) {
    if (d.parent == kNone) throw ContractError("border edge reported by the root unit");
    insert_up(d.parent, e, beta(node, x), beta(node, y), from_first);
  }
}

EdgeId ContractionStructure::find_class(EdgeId e) const {
  while (dsu_[e] != e) {
    dsu_[e] = dsu_[dsu_[e]];
    e = dsu_[e];
  }
  return e;
}

bool ContractionStructure::key_less(EdgeId a, EdgeId b) const {
  if (direction_ == Direction::weighted && weight_[a] != weight_[b]) return weight_[a] < weight_[b];
  return a < b;
}

void ContractionStructure::join_classes(EdgeId child_rep, EdgeId root_rep, EdgeId internal_rep) {
  forest_parent_[child_rep] = root_rep;
  next_sibling_[child_rep] = first_child_[root_rep];
  first_child_[root_rep] = child_rep;
  EdgeId a = find_class(child_rep), b = find_class(root_rep);
  if (dsu_size_[a] > dsu_size_[b]) std::swap(a, b);
  dsu_[a] = b;
  dsu_size_[b] += dsu_size_[a];
  class_rep_[b] = root_rep;
  class_internal_[b] = internal_rep;
}

void ContractionStructure::list_unlink(std::uint32_t slot) {
  list_next_[list_prev_[slot]] = list_next_[slot];
  list_prev_[list_next_[slot]] = list_prev_[slot];
  list_next_[slot] = list_prev_[slot] = slot;
}

void ContractionStructure::list_push(std::uint32_t slot, VertexId v) {
  const std::uint32_t head = static_cast<std::uint32_t>(2 * ends_.size() + v);
  list_prev_[slot] = list_prev_[head];
  list_next_[slot] = head;
  list_next_[list_prev_[head]] = slot;
  list_prev_[head] = slot;
}

void ContractionStructure::list_splice(VertexId into, VertexId from) {
  const std::uint32_t a = static_cast<std::uint32_t>(2 * ends_.size() + into);
  const std::uint32_t b = static_cast<std::uint32_t>(2 * ends_.size() + from);
  if (list_next_[b] == b) return;
  const std::uint32_t a_last = list_prev_[a], b_first = list_next_[b], b_last = list_prev_[b];
  list_next_[a_last] = b_first;
  list_prev_[b_first] = a_last;
  list_next_[b_last] = a;
  list_prev_[a] = b_last;
  list_next_[b] = list_prev_[b] = b;
}

void ContractionStructure::check_live_edge(EdgeId e) const {
  if (e >= edge_state_.size()) throw ContractError("unknown edge " + std::to_string(e));
  if (edge_state_[e] == EdgeState::loop) throw ContractError("edge " + std::to_string(e) + " is a self-loop");
  if (edge_state_[e] == EdgeState::contracted) throw ContractError("edge " + std::to_string(e) + " was contracted");
}

void ContractionStructure::check_live_vertex(VertexId v) const {
  if (!is_live_vertex(v)) throw ContractError("vertex " + std::to_string(v) + " is not a current vertex");
}

ContractReport ContractionStructure::contract(EdgeId e) {
  check_live_edge(e);
  const EdgeId root = find_class(e);
  const EdgeId rep = class_rep_[root];
  const auto [a0, b0] = ends_[e];
  const VertexId pu = vertex_of(a0), pv = vertex_of(b0);
  if (pu == pv) throw ContractError("edge " + std::to_string(e) + " joins a vertex to itself");
  const bool u_survives =
      vertex_size_[pu] != vertex_size_[pv] ? vertex_size_[pu] > vertex_size_[pv] : pu > pv;
  const VertexId ps = u_survives ? pu : pv, pa = u_survives ? pv : pu;

  ContractReport report;
  report.survivor = ps;
  std::vector<EdgeId> stack{rep};
  while (!stack.empty()) {
    const EdgeId f = stack.back();
    stack.pop_back();
    if (f == e) {
      edge_state_[f] = EdgeState::contracted;
    } else {
      edge_state_[f] = EdgeState::loop;
      report.self_loops.push_back(f);
    }
    std::vector<EdgeId> kids;
    for (EdgeId c = first_child_[f]; c != kNoEdge; c = next_sibling_[c]) kids.push_back(c);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  list_unlink(2 * rep);
  list_unlink(2 * rep + 1);
  --simple_edges_;

  events_.clear();
  merge_internal(a0, b0);
  const VertexId s_int = resolve(a0).x;
  public_of_internal_[s_int] = ps;
  internal_of_public_[ps] = s_int;
  vertex_alive_[pa] = 0;
  --live_vertices_;
  vertex_size_[ps] += vertex_size_[pa];
  degree_[ps] = degree_[pu] + degree_[pv] - 2;
  degree_[pa] = 0;
  list_splice(ps, pa);

  const bool absorbed_first = pa == pu;
  for (const Event& ev : events_) {
    const EdgeId cf = find_class(public_of_h_[ev.from]), ct = find_class(public_of_h_[ev.to]);
    const EdgeId rf = class_rep_[cf], rt = class_rep_[ct];
    bool from_wins;
    if (direction_ == Direction::structural)
      from_wins = ev.from_first != absorbed_first;
    else
      from_wins = key_less(rf, rt);
    const EdgeId child = from_wins ? rt : rf;
    const EdgeId winner = from_wins ? rf : rt;
    report.parallelisms.push_back({child, winner});
    const auto [p, q] = vertices(child);
    --degree_[p];
    --degree_[q];
    list_unlink(2 * child);
    list_unlink(2 * child + 1);
    --simple_edges_;
    join_classes(child, winner, ev.to);
  }
  return report;
}

VertexId ContractionStructure::vertex_of(VertexId v0) const {
  if (v0 >= internal_of_public_.size()) throw ContractError("unknown vertex " + std::to_string(v0));
  return public_of_internal_[resolve(v0).x];
}

std::pair<VertexId, VertexId> ContractionStructure::vertices(EdgeId e) const {
  if (e >= ends_.size()) throw ContractError("unknown edge " + std::to_string(e));
  if (edge_state_[e] == EdgeState::contracted) throw ContractError("edge " + std::to_string(e) + " was contracted");
  return {vertex_of(ends_[e].first), vertex_of(ends_[e].second)};
}

std::size_t ContractionStructure::deg(VertexId u) const {
  check_live_vertex(u);
  return degree_[u];
}

EdgeId ContractionStructure::edge(VertexId u, VertexId v) const {
  check_live_vertex(u);
  check_live_vertex(v);
  if (u == v) return kNoEdge;
  const EdgeId h = internal_edge(internal_of_public_[u], internal_of_public_[v]);
  if (h == kNoEdge) return kNoEdge;
  return class_rep_[find_class(public_of_h_[h])];
}

ContractionStructure::NeighborIterator::value_type ContractionStructure::NeighborIterator::operator*() const {
  const EdgeId e = slot_ / 2;
  const auto [p, q] = ds_->vertices(e);
  return {p == u_ ? q : p, e};
}

ContractionStructure::NeighborIterator& ContractionStructure::NeighborIterator::operator++() {
  slot_ = ds_->list_next_[slot_];
  return *this;
}

ContractionStructure::NeighborRange ContractionStructure::neighbors(VertexId u) const {
  check_live_vertex(u);
  const auto head = static_cast<std::uint32_t>(2 * ends_.size() + u);
  return {NeighborIterator(this, u, list_next_[head]), NeighborIterator(this, u, head)};
}

EdgeId ContractionStructure::representative(EdgeId e) const {
  check_live_edge(e);
  return class_rep_[find_class(e)];
}

std::vector<EdgeId> ContractionStructure::parallel_class(EdgeId e) const {
  std::vector<EdgeId> out;
  std::vector<EdgeId> stack{representative(e)};
  while (!stack.empty()) {
    const EdgeId f = stack.back();
    stack.pop_back();
    out.push_back(f);
    std::vector<EdgeId> kids;
    for (EdgeId c = first_child_[f]; c != kNoEdge; c = next_sibling_[c]) kids.push_back(c);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return out;
}

EdgeId ContractionStructure::min_weight_in_class(EdgeId e) const {
  if (weight_.empty()) throw ContractError("the graph carries no weights");
  if (direction_ == Direction::weighted) return representative(e);
  EdgeId best = kNoEdge;
  for (EdgeId f : parallel_class(e))
    if (best == kNoEdge || weight_[f] < weight_[best] || (weight_[f] == weight_[best] && f < best)) best = f;
  return best;
}

std::vector<UnitStats> ContractionStructure::unit_stats() const {
  std::vector<UnitStats> out;
  for (const auto& d : nodes_) {
    UnitStats s;
    s.level = d->level;
    s.interesting = d->index.size();
    s.border = static_cast<std::size_t>(std::count(d->ancestor.begin(), d->ancestor.end(), 1));
    s.micro = d->micro;
    s.counters = d->unit->counters();
    out.push_back(s);
  }
  return out;
}

Instrumentation ContractionStructure::total_counters() const {
  Instrumentation total;
  for (const auto& d : nodes_) total += d->unit->counters();
  return total;
}

std::size_t ContractionStructure::memory_bytes() const {
  std::size_t bytes = 0;
  bytes += ends_.capacity() * 8 + edge_state_.capacity() + weight_.capacity() * 8;
  bytes += (forest_parent_.capacity() + first_child_.capacity() + next_sibling_.capacity() + dsu_.capacity()) * 4;
  bytes += (dsu_size_.capacity() + class_rep_.capacity() + class_internal_.capacity()) * 4;
  bytes += (list_next_.capacity() + list_prev_.capacity()) * 4 + vertex_size_.capacity() * 9;
  bytes += h_ends_.capacity() * 8 + public_of_h_.capacity() * 4;
  bytes += (public_of_internal_.capacity() + internal_of_public_.capacity() + leaf_of_.capacity() + home_of_.capacity()) * 4;
  for (const auto& d : nodes_) {
    const std::size_t t = d->index.size();
    bytes += t * 4 * 4 + d->child_list.capacity() * 4 + d->gamma.memory_bytes();
    bytes += d->micro ? 64 : t * 40 + 64;
    d->unit->for_each_edge([&](EdgeId, VertexId, VertexId) { bytes += d->micro ? 0 : 40; });
  }
  return bytes;
}

void ContractionStructure::check_invariants() const {
  auto fail = [](const std::string& what) { throw ContractError("invariant: " + what); };
  for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
    const Node& d = *nodes_[id];
    if (const auto* mu = dynamic_cast<const MergeUnit*>(d.unit.get())) mu->check_invariants();
    const auto& names = d.index.names();
    std::vector<char> rep_has_ancestor(names.size(), 0);
    for (std::uint32_t i = 0; i < names.size(); ++i)
      if (d.ancestor[i]) rep_has_ancestor[d.index.find(d.unit->phi(names[i]))] = 1;
    for (std::uint32_t i = 0; i < names.size(); ++i) {
      const VertexId r = d.unit->phi(names[i]);
      if (r != names[i]) continue;
      if (d.unit->is_border(r) != bool(rep_has_ancestor[i]))
        fail("border set of unit " + std::to_string(id) + " differs from its ancestor vertices");
    }
    if (d.parent != kNone) {
      const Node& p = *nodes_[d.parent];
      for (std::uint32_t i = 0; i < names.size(); ++i) {
        if (!d.ancestor[i]) continue;
        const VertexId here = d.unit->phi(names[i]);
        const VertexId above = p.unit->phi(names[i]);
        if (beta(id, here) != above) fail("beta of unit " + std::to_string(id) + " is stale");
        if (p.gamma.find(Gamma::key(id, above)) != here) fail("gamma towards unit " + std::to_string(id) + " is stale");
      }
    }
  }

  const std::size_t m = ends_.size();
  std::vector<std::uint32_t> seen(m, 0);
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < vertex_alive_.size(); ++u) {
    if (!vertex_alive_[u]) continue;
    if (public_of_internal_[internal_of_public_[u]] != u) fail("label maps disagree at " + std::to_string(u));
    if (vertex_of(u) != u) fail("live vertex " + std::to_string(u) + " does not resolve to itself");
    std::size_t len = 0;
    for (auto [v, e] : neighbors(u)) {
      ++len;
      ++seen[e];
      if (edge_state_[e] != EdgeState::live || class_rep_[find_class(e)] != e)
        fail("neighbor list of " + std::to_string(u) + " holds a non-representative");
      if (v == u) fail("neighbor list of " + std::to_string(u) + " holds a self-loop");
      if (edge(u, v) != e) fail("edge(" + std::to_string(u) + ", " + std::to_string(v) + ") disagrees with the lists");
    }
    if (len != degree_[u]) fail("deg of " + std::to_string(u) + " differs from its list length");
    degree_sum += len;
  }
  if (degree_sum != 2 * simple_edges_) fail("degree sum differs from the simple edge count");
  for (EdgeId e = 0; e < m; ++e) {
    const bool rep = edge_state_[e] == EdgeState::live && class_rep_[find_class(e)] == e;
    if (seen[e] != (rep ? 2u : 0u)) fail("edge " + std::to_string(e) + " listed " + std::to_string(seen[e]) + " times");
  }
}

}  // namespace pgc
