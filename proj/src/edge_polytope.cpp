#include "revdiam/edge_polytope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "revdiam/distance.hpp"
#include "revdiam/error.hpp"

namespace revdiam {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::size_t kMaxDilate = 16;

// Transportation view of membership: y lies in tP exactly when some
// nonnegative arc flow has net inflow y and total value t. Flows decompose
// into source-to-sink paths plus circulations, so the attainable totals form
// the interval [cheapest routing, dearest routing], open above when the arc
// set has a directed cycle.
class FlowOracle {
 public:
  FlowOracle(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs) : n_(n) {
    Digraph g(static_cast<VertexId>(n));
    for (auto [t, h] : arcs) g.add_arc(t, h);
    shortest_.assign(n * n, kUnreachable);
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
      const auto row = distances_from(g, u);
      for (std::size_t v = 0; v < n; ++v)
        if (row[v].is_finite()) shortest_[static_cast<std::size_t>(u) * n + v] = row[v].value();
    }
    cyclic_ = false;
    for (std::size_t u = 0; u < n && !cyclic_; ++u)
      for (auto [t, h] : arcs)
        if (static_cast<std::size_t>(h) == u && shortest_[u * n + static_cast<std::size_t>(t)] < kUnreachable) {
          cyclic_ = true;
          break;
        }
    if (!cyclic_) longest_paths(arcs);
  }

  bool cyclic() const { return cyclic_; }

  // Cheapest and dearest total for net inflow y; nullopt when y is not routable.
  std::optional<std::pair<std::int64_t, std::int64_t>> totals(const std::vector<std::int64_t>& y) const {
    std::vector<std::size_t> sources, sinks;
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::int64_t i = 0; i < -y[v]; ++i) sources.push_back(v);
      for (std::int64_t i = 0; i < y[v]; ++i) sinks.push_back(v);
    }
    const std::int64_t low = assignment(sources, sinks, shortest_, false);
    if (low >= kUnreachable) return std::nullopt;
    const std::int64_t high = cyclic_ ? kUnreachable : assignment(sources, sinks, longest_, true);
    return std::pair{low, high};
  }

 private:
  void longest_paths(const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    longest_.assign(n_ * n_, -1);
    for (std::size_t v = 0; v < n_; ++v) longest_[v * n_ + v] = 0;
    // n rounds of relaxation settle every path in a DAG.
    for (std::size_t round = 0; round < n_; ++round)
      for (std::size_t s = 0; s < n_; ++s)
        for (auto [t, h] : arcs) {
          const std::int64_t via = longest_[s * n_ + static_cast<std::size_t>(t)];
          if (via >= 0) {
            auto& cell = longest_[s * n_ + static_cast<std::size_t>(h)];
            cell = std::max(cell, via + 1);
          }
        }
  }

  // Optimal perfect matching of source units to sink units by bitmask DP.
  std::int64_t assignment(const std::vector<std::size_t>& sources, const std::vector<std::size_t>& sinks,
                          const std::vector<std::int64_t>& cost, bool maximise) const {
    const std::size_t s = sources.size();
    if (s == 0) return 0;
    const std::int64_t none = maximise ? -1 : kUnreachable;
    std::vector<std::int64_t> dp(std::size_t{1} << s, none);
    dp[0] = 0;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
      if (dp[mask] == none) continue;
      const auto i = static_cast<std::size_t>(std::popcount(mask));
      if (i == s) continue;
      for (std::size_t j = 0; j < s; ++j) {
        if (mask >> j & 1) continue;
        const std::int64_t c = cost[sources[i] * n_ + sinks[j]];
        if (maximise ? c < 0 : c >= kUnreachable) continue;
        auto& cell = dp[mask | (std::size_t{1} << j)];
        const std::int64_t v = dp[mask] + c;
        cell = maximise ? std::max(cell, v) : std::min(cell, v);
      }
    }
    const std::int64_t out = dp.back();
    if (maximise) return out < 0 ? kUnreachable : out;
    return out;
  }

  std::size_t n_;
  bool cyclic_ = false;
  std::vector<std::int64_t> shortest_;
  std::vector<std::int64_t> longest_;
};

// Calls visit(y) for every y with sum 0, positive mass at most `mass`, y_v > 0
// only where v has an in-arc and y_v < 0 only where v has an out-arc. Every
// lattice point of tP (t <= mass) is among them.
void for_each_candidate(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs, std::int64_t mass,
                        const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit) {
  std::vector<bool> gains(n, false), loses(n, false);
  for (auto [t, h] : arcs) {
    loses[static_cast<std::size_t>(t)] = true;
    gains[static_cast<std::size_t>(h)] = true;
  }
  std::vector<std::int64_t> y(n, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t v, std::int64_t pos,
                                                                          std::int64_t neg) {
    if (v == n) {
      if (pos == neg) visit(y, pos);
      return;
    }
    const std::int64_t lo = loses[v] ? -(mass - neg) : 0;
    const std::int64_t hi = gains[v] ? mass - pos : 0;
    for (std::int64_t x = lo; x <= hi; ++x) {
      y[v] = x;
      rec(v + 1, pos + std::max<std::int64_t>(x, 0), neg + std::max<std::int64_t>(-x, 0));
    }
    y[v] = 0;
  };
  rec(0, 0, 0);
}

Rational binomial(std::size_t n, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * Rational(static_cast<long long>(n - k + i)) / Rational(static_cast<long long>(i));
  return r;
}

void check_caps(const LatticePointSet& p, const VolumeOptions& options) {
  const std::size_t generators = p.distinct_points().size();
  if (generators > options.generator_cap)
    throw CapExceeded("volume limited to " + std::to_string(options.generator_cap) + " generators, got " +
                      std::to_string(generators));
  const std::size_t dim = p.affine_dimension();
  if (dim > options.dimension_cap)
    throw CapExceeded("volume limited to dimension " + std::to_string(options.dimension_cap) + ", got " +
                      std::to_string(dim));
}

}  // namespace

LatticePointSet::LatticePointSet(std::size_t ambient_dimension, std::vector<std::vector<std::int64_t>> points)
    : n_(ambient_dimension), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.size() != n_) throw InvalidArgument("generator has wrong dimension");
    std::size_t plus = 0, minus = 0, zero = 0;
    for (std::int64_t x : p) (x == 1 ? plus : x == -1 ? minus : x == 0 ? zero : n_)++;
    if (plus != 1 || minus != 1 || zero + 2 != n_) throw InvalidArgument("generator is not of the form e_v - e_w");
  }
}

std::vector<std::vector<std::int64_t>> LatticePointSet::distinct_points() const {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : points_)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> LatticePointSet::distinct_arcs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& p : distinct_points()) {
    const auto tail = std::find(p.begin(), p.end(), -1) - p.begin();
    const auto head = std::find(p.begin(), p.end(), 1) - p.begin();
    out.emplace_back(static_cast<VertexId>(tail), static_cast<VertexId>(head));
  }
  return out;
}

std::size_t LatticePointSet::affine_dimension() const {
  const auto pts = distinct_points();
  if (pts.size() <= 1) return 0;
  RationalMatrix m(pts.size() - 1, n_);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t c = 0; c < n_; ++c) m.at(i - 1, c) = pts[i][c] - pts[0][c];
  return rank(std::move(m));
}

LatticePointSet directed_edge_polytope(const Digraph& d) {
  if (d.vertex_count() < 2 || d.arc_count() < 1) throw InvalidArgument("edge polytope needs n >= 2 and m >= 1");
  const auto n = static_cast<std::size_t>(d.vertex_count());
  std::vector<std::vector<std::int64_t>> pts;
  for (const Arc& a : d.arcs()) {
    std::vector<std::int64_t> p(n, 0);
    p[static_cast<std::size_t>(a.head)] = 1;
    p[static_cast<std::size_t>(a.tail)] = -1;
    pts.push_back(std::move(p));
  }
  return LatticePointSet(n, std::move(pts));
}

std::vector<std::int64_t> ehrhart_counts(const LatticePointSet& p, std::size_t max_dilate, MembershipTest membership) {
  if (max_dilate > kMaxDilate) throw CapExceeded("dilates above " + std::to_string(kMaxDilate) + " are not counted");
  const std::size_t n = p.ambient_dimension();
  const auto arcs = p.distinct_arcs();
  const auto gens = p.distinct_points();
  const auto top = static_cast<std::int64_t>(max_dilate);
  std::vector<std::int64_t> counts(max_dilate + 1, 0);

  if (membership == MembershipTest::Flow) {
    const FlowOracle oracle(n, arcs);
    for_each_candidate(n, arcs, top, [&](const std::vector<std::int64_t>& y, std::int64_t) {
      const auto range = oracle.totals(y);
      if (!range) return;
      const auto [low, high] = *range;
      for (std::int64_t t = low; t <= std::min(high, top); ++t) ++counts[static_cast<std::size_t>(t)];
    });
    return counts;
  }

  RationalMatrix a(n + 1, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t i = 0; i < n; ++i) a.at(i, g) = gens[g][i];
    a.at(n, g) = 1;
  }
  for_each_candidate(n, arcs, top, [&](const std::vector<std::int64_t>& y, std::int64_t mass) {
    std::vector<Rational> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) b[i] = y[i];
    for (std::int64_t t = std::max<std::int64_t>(mass, 0); t <= top; ++t) {
      if (t == 0) {
        ++counts[0];  // {0} = 0P
        continue;
      }
      b[n] = t;
      if (find_nonnegative_solution(a, b)) ++counts[static_cast<std::size_t>(t)];
    }
  });
  return counts;
}

std::vector<Rational> ehrhart_polynomial(const LatticePointSet& p, const VolumeOptions& options) {
  check_caps(p, options);
  const std::size_t r = p.affine_dimension();
  const auto counts = ehrhart_counts(p, r, options.membership);
  // Solve the Vandermonde system sum_k c_k t^k = L(t), t = 0..r.
  const std::size_t size = r + 1;
  RationalMatrix m(size, size + 1);
  for (std::size_t t = 0; t < size; ++t) {
    Rational power = 1;
    for (std::size_t k = 0; k < size; ++k) {
      m.at(t, k) = power;
      power *= static_cast<long long>(t);
    }
    m.at(t, size) = counts[t];
  }
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t piv = c;
    while (m.at(piv, c) == 0) ++piv;
    for (std::size_t k = 0; k <= size; ++k) std::swap(m.at(c, k), m.at(piv, k));
    const Rational lead = m.at(c, c);
    for (std::size_t k = 0; k <= size; ++k) m.at(c, k) /= lead;
    for (std::size_t r2 = 0; r2 < size; ++r2) {
      if (r2 == c || m.at(r2, c) == 0) continue;
      const Rational f = m.at(r2, c);
      for (std::size_t k = 0; k <= size; ++k) m.at(r2, k) -= f * m.at(c, k);
    }
  }
  std::vector<Rational> coeffs(size);
  for (std::size_t k = 0; k < size; ++k) coeffs[k] = m.at(k, size);
  return coeffs;
}

RationalVolume normalized_volume(const LatticePointSet& p, const VolumeOptions& options) {
  check_caps(p, options);
  const std::size_t r = p.affine_dimension();
  const auto counts = ehrhart_counts(p, r, options.membership);
  // r-th finite difference of L at 0 = r! * leading coefficient.
  Rational v = 0;
  for (std::size_t t = 0; t <= r; ++t) {
    const Rational term = binomial(r, t) * Rational(static_cast<long long>(counts[t]));
    if ((r - t) % 2 == 0)
      v += term;
    else
      v -= term;
  }
  return RationalVolume{v};
}

RationalVolume cactus_volume(const Digraph& d, const CycleTree& tree) {
  if (tree.real_cycle_count() == 0) throw InvalidArgument("cactus volume needs at least one cycle");
  Rational v = 1;
  for (const Cycle& c : tree.cycles) {
    if (c.synthetic) continue;
    std::size_t forward = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Arc& a = d.arc(tree.arc_origin[static_cast<std::size_t>(c.arcs[i])]);
      if (a.tail == tree.vertex_origin[static_cast<std::size_t>(c.vertices[i])]) ++forward;
    }
    if (forward != 0 && forward != c.size()) throw InvalidArgument("cactus volume needs every cycle directed");
    v *= static_cast<long long>(c.size());
  }
  return RationalVolume{v};
}

RationalVolume cactus_volume(const Digraph& d) {
  const CactusDecomposition dec = cactus_decompose(d);
  if (std::holds_alternative<NotCactusResult>(dec)) throw NotCactus("input graph is not a cactus");
  if (std::holds_alternative<HasBridgeResult>(dec)) throw InvalidArgument("cactus volume needs a bridgeless graph");
  return cactus_volume(d, std::get<CycleTree>(dec));
}

CounterexamplePair build_counterexample_pair(std::int64_t i) {
  if (i < 8) throw InvalidArgument("counter-example family starts at i = 8");
  const bool odd = i % 2 != 0;
  const auto k = static_cast<VertexId>(i / 2);  // path length
  // Path p_0 .. p_k, then the middle vertices of each return route.
  const VertexId n = k + 1 + k + (odd ? 1 : 0);
  CounterexamplePair out;
  out.g = Digraph(n);
  std::vector<std::vector<ArcId>> cycle_arcs;
  VertexId next = k + 1;
  for (VertexId j = 0; j < k; ++j) {
    std::vector<ArcId> arcs;
    arcs.push_back(out.g.add_arc(j, j + 1));
    VertexId at = j + 1;
    const int middles = (odd && j == k - 1) ? 2 : 1;
    for (int m = 0; m < middles; ++m) {
      arcs.push_back(out.g.add_arc(at, next));
      at = next++;
    }
    arcs.push_back(out.g.add_arc(at, j));
    cycle_arcs.push_back(std::move(arcs));
  }
  // Cycle 1 touches cycles 0 and 2.
  out.reversed_cycle = 1;
  out.h = reverse_arcs(out.g, ReversalSet(cycle_arcs[out.reversed_cycle]));
  return out;
}

std::vector<SweepRow> orientation_sweep(const Digraph& d, const VolumeOptions& options) {
  const auto m = static_cast<std::size_t>(d.arc_count());
  if (m > options.generator_cap) throw CapExceeded("sweep limited to " + std::to_string(options.generator_cap) + " arcs");
  std::vector<SweepRow> rows;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<ArcId> flips;
    for (std::size_t a = 0; a < m; ++a)
      if (mask >> a & 1) flips.push_back(static_cast<ArcId>(a));
    const Digraph g = reverse_arcs(d, ReversalSet(flips));
    rows.push_back({mask, diameter(g), normalized_volume(directed_edge_polytope(g), options)});
  }
  return rows;
}

}  // namespace revdiam
