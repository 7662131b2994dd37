#include "revdiam/cactus_solver.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <limits>
#include <stdexcept>

#include "revdiam/distance.hpp"
#include "revdiam/error.hpp"

namespace revdiam {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Min reversal cost of a hanging subtree indexed by bounds (to, from): the
// subtree's internal diameter is at most d, every vertex is reachable from the
// attachment vertex within `to` and reaches it within `from`. Monotone
// (non-increasing) in both bounds.
class BoundTable {
 public:
  BoundTable() = default;
  explicit BoundTable(std::int64_t cap, std::int64_t fill = kInf)
      : cap_(cap), cells_(static_cast<std::size_t>((cap + 1) * (cap + 1)), fill) {}

  std::int64_t cap() const { return cap_; }
  std::int64_t& at(std::int64_t to, std::int64_t from) { return cells_[index(to, from)]; }
  std::int64_t at(std::int64_t to, std::int64_t from) const { return cells_[index(to, from)]; }

  void make_monotone() {
    for (std::int64_t t = 0; t <= cap_; ++t)
      for (std::int64_t f = 0; f <= cap_; ++f) {
        if (t > 0) at(t, f) = std::min(at(t, f), at(t - 1, f));
        if (f > 0) at(t, f) = std::min(at(t, f), at(t, f - 1));
      }
  }

  // Pareto corners; every finite entry is matched by a corner at or below it.
  std::vector<std::pair<std::int64_t, std::int64_t>> corners() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t t = 0; t <= cap_; ++t)
      for (std::int64_t f = 0; f <= cap_; ++f) {
        const std::int64_t c = at(t, f);
        if (c >= kInf) continue;
        if (t > 0 && at(t - 1, f) <= c) continue;
        if (f > 0 && at(t, f - 1) <= c) continue;
        out.emplace_back(t, f);
      }
    return out;
  }

 private:
  std::size_t index(std::int64_t t, std::int64_t f) const { return static_cast<std::size_t>(t * (cap_ + 1) + f); }

  std::int64_t cap_ = 0;
  std::vector<std::int64_t> cells_;
};

// One pass around a directed cycle (or a zero-length hub) from its anchor.
//
// Item j sits at directed distance offset[j] from the anchor, and the anchor is
// reached back after `length` in total. With bounds (t_j, f_j) on item j let
//   reach_j = t_j + offset_j   (anchor -> deepest vertex below item j)
//   slack_j = f_j - offset_j   (so slack_j + length bounds the way back)
// For i before j the route i -> j costs f_i + t_j + offset_j - offset_i, and
// for i after j it wraps around and costs `length` more. Scanning items in
// order, the running maxima of slack and reach are therefore the only state
// needed to check every ordered pair against d.
class RingDp {
 public:
  struct Item {
    const BoundTable* table;
    std::int64_t offset;
  };

  RingDp(std::vector<Item> items, std::int64_t length, std::int64_t d, std::int64_t cap)
      : items_(std::move(items)), length_(length), d_(d), cap_(cap), side_(cap + 2) {
    run();
  }

  // Cheapest final state inside (to, from) bounds, or nullopt.
  struct Final {
    std::size_t state;
    std::int64_t cost;
  };

  // Raw cost by exact (to, from) of the whole ring, before monotone closure.
  BoundTable raw(std::int64_t extra_cost) const {
    BoundTable out(cap_);
    const auto& last = layers_.back();
    for (std::size_t s = 0; s < last.size(); ++s) {
      if (last[s].cost >= kInf) continue;
      const auto [to, from] = bounds_of(s);
      if (to < 0 || from < 0 || to > cap_ || from > cap_) continue;
      out.at(to, from) = std::min(out.at(to, from), last[s].cost + extra_cost);
    }
    return out;
  }

  // First final state (in index order) within bounds with exactly `cost`.
  std::optional<std::size_t> find_final(std::int64_t to, std::int64_t from, std::int64_t cost) const {
    const auto& last = layers_.back();
    for (std::size_t s = 0; s < last.size(); ++s) {
      if (last[s].cost != cost) continue;
      const auto [t, f] = bounds_of(s);
      if (t <= to && f <= from) return s;
    }
    return std::nullopt;
  }

  // Per-item bounds that produced final state `s`.
  std::vector<std::pair<std::int64_t, std::int64_t>> trace(std::size_t s) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> picks(items_.size());
    for (std::size_t j = items_.size(); j-- > 0;) {
      const Cell& c = layers_[j + 1][s];
      picks[j] = {c.to, c.from};
      s = c.prev;
    }
    return picks;
  }

 private:
  struct Cell {
    std::int64_t cost = kInf;
    std::size_t prev = 0;
    std::int64_t to = 0;
    std::int64_t from = 0;
  };

  // slack index 0 = none, else slack + length + 1; reach index 0 = none, else reach + 1.
  std::size_t state(std::size_t si, std::size_t ri) const { return si * static_cast<std::size_t>(side_) + ri; }

  std::pair<std::int64_t, std::int64_t> bounds_of(std::size_t s) const {
    const auto si = static_cast<std::int64_t>(s) / side_;
    const auto ri = static_cast<std::int64_t>(s) % side_;
    if (si == 0 || ri == 0) return {-1, -1};
    const std::int64_t slack = si - 1 - length_;
    const std::int64_t reach = ri - 1;
    return {reach, slack + length_};
  }

  void run() {
    // Slack lies in [-length, cap - length]; reach in [0, cap].
    const std::size_t slack_slots = static_cast<std::size_t>(cap_ + 2);
    std::vector<Cell> first(slack_slots * static_cast<std::size_t>(side_));
    first[state(0, 0)].cost = 0;
    layers_.push_back(std::move(first));

    for (const Item& item : items_) {
      const auto& cur = layers_.back();
      std::vector<Cell> next(cur.size());
      const auto options = item.table->corners();
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (cur[s].cost >= kInf) continue;
        const std::size_t si = s / static_cast<std::size_t>(side_);
        const std::size_t ri = s % static_cast<std::size_t>(side_);
        const bool has_slack = si != 0, has_reach = ri != 0;
        const std::int64_t max_slack = static_cast<std::int64_t>(si) - 1 - length_;
        const std::int64_t max_reach = static_cast<std::int64_t>(ri) - 1;
        for (const auto& [t, f] : options) {
          const std::int64_t reach = t + item.offset;
          const std::int64_t slack = f - item.offset;
          if (reach > cap_ || slack + length_ > cap_) continue;
          if (has_slack && max_slack + reach > d_) continue;
          if (has_reach && slack + max_reach > d_ - length_) continue;
          const std::int64_t ns = has_slack ? std::max(max_slack, slack) : slack;
          const std::int64_t nr = has_reach ? std::max(max_reach, reach) : reach;
          const std::size_t target =
              state(static_cast<std::size_t>(ns + length_ + 1), static_cast<std::size_t>(nr + 1));
          const std::int64_t cost = cur[s].cost + item.table->at(t, f);
          if (cost < next[target].cost) next[target] = Cell{cost, s, t, f};
        }
      }
      layers_.push_back(std::move(next));
    }
  }

  std::vector<Item> items_;
  std::int64_t length_;
  std::int64_t d_;
  std::int64_t cap_;
  std::int64_t side_;
  std::vector<std::vector<Cell>> layers_;
};

enum class Orientation { Clockwise, Counterclockwise };

class CactusDp {
 public:
  CactusDp(const CycleTree& tree, std::vector<CycleOrientationCost> costs, std::int64_t d, std::int64_t cap)
      : tree_(tree),
        costs_(std::move(costs)),
        owners_(tree.cycles_by_vertex()),
        d_(d),
        cap_(cap),
        zero_(cap, 0),
        vertex_tables_(owners_.size()),
        vertex_rings_(owners_.size()),
        cycle_tables_(tree.cycles.size()),
        cycle_rings_(tree.cycles.size()),
        orientation_(tree.cycles.size(), Orientation::Clockwise) {}

  std::int64_t solve(VertexId root) {
    root_ = root;
    return vertex_table(root, kNoCycle).at(cap_, cap_);
  }

  std::vector<Orientation> trace(std::int64_t cost) {
    trace_vertex(root_, kNoCycle, cap_, cap_, cost);
    return orientation_;
  }

 private:
  static constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> children_of(VertexId v, std::size_t parent) const {
    std::vector<std::size_t> out;
    for (std::size_t c : owners_[static_cast<std::size_t>(v)])
      if (c != parent) out.push_back(c);
    return out;
  }

  // Non-anchor vertices of cycle c in the given direction with their offsets.
  std::vector<std::pair<VertexId, std::int64_t>> walk(std::size_t c, VertexId anchor, Orientation o) const {
    const Cycle& cyc = tree_.cycles[c];
    const std::size_t len = cyc.size();
    const auto start = static_cast<std::size_t>(
        std::find(cyc.vertices.begin(), cyc.vertices.end(), anchor) - cyc.vertices.begin());
    std::vector<std::pair<VertexId, std::int64_t>> out;
    std::int64_t offset = 0;
    for (std::size_t step = 1; step < len; ++step) {
      std::size_t pos;
      Weight w;
      if (o == Orientation::Clockwise) {
        pos = (start + step) % len;
        w = tree_.expanded.arc(cyc.arcs[(pos + len - 1) % len]).weight;
      } else {
        pos = (start + len - step) % len;
        w = tree_.expanded.arc(cyc.arcs[pos]).weight;
      }
      offset += w;
      out.emplace_back(cyc.vertices[pos], offset);
    }
    return out;
  }

  std::int64_t cycle_length(std::size_t c) const {
    std::int64_t total = 0;
    for (ArcId id : tree_.cycles[c].arcs) total += tree_.expanded.arc(id).weight;
    return total;
  }

  const BoundTable& vertex_table(VertexId v, std::size_t parent) {
    const auto vi = static_cast<std::size_t>(v);
    if (vertex_tables_[vi]) return *vertex_tables_[vi];
    const auto kids = children_of(v, parent);
    if (kids.empty()) {
      vertex_tables_[vi] = zero_;
    } else if (kids.size() == 1) {
      vertex_tables_[vi] = cycle_table(kids[0], v);
    } else {
      // Cycles meeting at v behave like a ring of length zero around v.
      std::vector<RingDp::Item> items;
      for (std::size_t c : kids) items.push_back({&cycle_table(c, v), 0});
      vertex_rings_[vi].emplace(std::move(items), 0, d_, cap_);
      BoundTable t = vertex_rings_[vi]->raw(0);
      t.make_monotone();
      vertex_tables_[vi] = std::move(t);
    }
    return *vertex_tables_[vi];
  }

  const BoundTable& cycle_table(std::size_t c, VertexId anchor) {
    if (cycle_tables_[c]) return *cycle_tables_[c];
    const std::int64_t length = cycle_length(c);
    BoundTable best(cap_);
    for (Orientation o : {Orientation::Clockwise, Orientation::Counterclockwise}) {
      std::vector<RingDp::Item> items;
      for (const auto& [u, offset] : walk(c, anchor, o)) items.push_back({&vertex_table(u, c), offset});
      auto& ring = cycle_rings_[c][o == Orientation::Clockwise ? 0 : 1];
      ring.emplace(std::move(items), length, d_, cap_);
      const BoundTable raw = ring->raw(orientation_cost(c, o));
      for (std::int64_t t = 0; t <= cap_; ++t)
        for (std::int64_t f = 0; f <= cap_; ++f) best.at(t, f) = std::min(best.at(t, f), raw.at(t, f));
    }
    best.make_monotone();
    cycle_tables_[c] = std::move(best);
    return *cycle_tables_[c];
  }

  std::int64_t orientation_cost(std::size_t c, Orientation o) const {
    return o == Orientation::Clockwise ? costs_[c].clockwise : costs_[c].counterclockwise();
  }

  void trace_vertex(VertexId v, std::size_t parent, std::int64_t to, std::int64_t from, std::int64_t cost) {
    const auto kids = children_of(v, parent);
    if (kids.empty()) return;
    if (kids.size() == 1) {
      trace_cycle(kids[0], v, to, from, cost);
      return;
    }
    const RingDp& ring = *vertex_rings_[static_cast<std::size_t>(v)];
    const auto final_state = ring.find_final(to, from, cost);
    if (!final_state) throw std::logic_error("cactus trace-back lost its state");
    const auto picks = ring.trace(*final_state);
    for (std::size_t j = 0; j < kids.size(); ++j) {
      const auto [t, f] = picks[j];
      trace_cycle(kids[j], v, t, f, cycle_tables_[kids[j]]->at(t, f));
    }
  }

  void trace_cycle(std::size_t c, VertexId anchor, std::int64_t to, std::int64_t from, std::int64_t cost) {
    for (Orientation o : {Orientation::Clockwise, Orientation::Counterclockwise}) {
      const RingDp& ring = *cycle_rings_[c][o == Orientation::Clockwise ? 0 : 1];
      const auto final_state = ring.find_final(to, from, cost - orientation_cost(c, o));
      if (!final_state) continue;
      orientation_[c] = o;
      const auto picks = ring.trace(*final_state);
      const auto verts = walk(c, anchor, o);
      for (std::size_t j = 0; j < verts.size(); ++j) {
        const VertexId u = verts[j].first;
        const auto [t, f] = picks[j];
        trace_vertex(u, c, t, f, vertex_tables_[static_cast<std::size_t>(u)]->at(t, f));
      }
      return;
    }
    throw std::logic_error("cactus trace-back lost its state");
  }

  const CycleTree& tree_;
  std::vector<CycleOrientationCost> costs_;
  std::vector<std::vector<std::size_t>> owners_;
  std::int64_t d_;
  std::int64_t cap_;
  BoundTable zero_;
  VertexId root_ = 0;
  std::vector<std::optional<BoundTable>> vertex_tables_;
  std::vector<std::optional<RingDp>> vertex_rings_;
  std::vector<std::optional<BoundTable>> cycle_tables_;
  std::vector<std::array<std::optional<RingDp>, 2>> cycle_rings_;
  std::vector<Orientation> orientation_;
};

bool agrees_clockwise(const Digraph& g, const Cycle& c, std::size_t i) {
  return g.arc(c.arcs[i]).tail == c.vertices[i];
}

}  // namespace

std::vector<CycleOrientationCost> cycle_costs(const Digraph& d, const CycleTree& tree, CostMode mode) {
  std::vector<CycleOrientationCost> out;
  for (const Cycle& c : tree.cycles) {
    CycleOrientationCost cost;
    if (!c.synthetic) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const ArcId original = tree.arc_origin[static_cast<std::size_t>(c.arcs[i])];
        const std::int64_t w = mode == CostMode::Cardinality ? 1 : d.arc(original).weight;
        cost.total += w;
        if (!agrees_clockwise(tree.expanded, c, i)) cost.clockwise += w;
      }
    }
    out.push_back(cost);
  }
  return out;
}

std::optional<Solution> solve_cactus(const Digraph& d, std::int64_t target, std::int64_t budget, CostMode mode,
                                     const CactusOptions& options) {
  if (target < 2) throw DiameterBelowTwo();
  if (budget < 0) throw InvalidArgument("negative reversal budget");
  if (options.root < 0 || options.root >= d.vertex_count()) throw InvalidArgument("root vertex out of range");

  const CactusDecomposition dec = cactus_decompose(d);
  if (std::holds_alternative<NotCactusResult>(dec)) throw NotCactus("input graph is not a cactus");
  if (std::holds_alternative<HasBridgeResult>(dec)) return std::nullopt;
  const CycleTree& tree = std::get<CycleTree>(dec);

  if (tree.cycles.empty()) return Solution{ReversalSet{}, diameter(d), 0};

  const std::int64_t cap = std::min<std::int64_t>(target, tree.expanded.total_weight());
  CactusDp dp(tree, cycle_costs(d, tree, mode), target, cap);
  const std::int64_t best = dp.solve(tree.representative(options.root));
  if (best >= kInf || best > budget) return std::nullopt;

  const auto orientation = dp.trace(best);
  std::vector<ArcId> flips;
  for (std::size_t c = 0; c < tree.cycles.size(); ++c) {
    const Cycle& cyc = tree.cycles[c];
    if (cyc.synthetic) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const bool cw = agrees_clockwise(tree.expanded, cyc, i);
      if (cw != (orientation[c] == Orientation::Clockwise))
        flips.push_back(tree.arc_origin[static_cast<std::size_t>(cyc.arcs[i])]);
    }
  }
  Solution s{ReversalSet(std::move(flips)), ExtendedDistance(), 0};
  s.achieved_diameter = diameter(reverse_arcs(d, s.witness));
  s.cost = reversal_cost(d, s.witness, mode);
  if (s.cost != best || !s.achieved_diameter.at_most(target))
    throw std::logic_error("cactus dynamic program produced an inconsistent witness");
  return s;
}

}  // namespace revdiam
