#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "revdiam/cactus.hpp"
#include "revdiam/digraph.hpp"
#include "revdiam/rational_lp.hpp"

namespace revdiam {

/// Generators e_head - e_tail of a directed edge polytope, one per arc.
class LatticePointSet {
 public:
  LatticePointSet(std::size_t ambient_dimension, std::vector<std::vector<std::int64_t>> points);

  std::size_t ambient_dimension() const { return n_; }
  const std::vector<std::vector<std::int64_t>>& points() const { return points_; }
  /// Distinct generators in first-seen order.
  std::vector<std::vector<std::int64_t>> distinct_points() const;
  /// Dimension of the affine hull.
  std::size_t affine_dimension() const;
  /// Arc (tail, head) behind each distinct generator.
  std::vector<std::pair<VertexId, VertexId>> distinct_arcs() const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::int64_t>> points_;
};

/// Volume relative to the lattice of the affine hull, scaled by (dim)!, so a
/// unimodular simplex has volume 1.
struct RationalVolume {
  Rational value;

  friend bool operator==(const RationalVolume&, const RationalVolume&) = default;
};

LatticePointSet directed_edge_polytope(const Digraph& d);

enum class MembershipTest {
  Flow,        ///< min/max-cost transportation over the arc graph
  RationalLp,  ///< exact phase-one simplex on the convex-combination system
};

struct VolumeOptions {
  std::size_t generator_cap = 16;
  std::size_t dimension_cap = 6;
  MembershipTest membership = MembershipTest::Flow;
};

/// #(tP ∩ Z^n) for t = 0..max_dilate.
std::vector<std::int64_t> ehrhart_counts(const LatticePointSet& p, std::size_t max_dilate,
                                         MembershipTest membership = MembershipTest::Flow);

/// Coefficients c_0..c_dim of the Ehrhart polynomial, lowest degree first.
std::vector<Rational> ehrhart_polynomial(const LatticePointSet& p, const VolumeOptions& options = {});

/// Throws CapExceeded past the generator or dimension cap.
RationalVolume normalized_volume(const LatticePointSet& p, const VolumeOptions& options = {});

/// Product of cycle lengths. Every cycle must be directed; throws InvalidArgument
/// otherwise and NotCactus for non-cactus input.
RationalVolume cactus_volume(const Digraph& d, const CycleTree& tree);
RationalVolume cactus_volume(const Digraph& d);

struct CounterexamplePair {
  Digraph g;
  Digraph h;
  std::size_t reversed_cycle = 0;  // index of the 3-cycle flipped to get h
};

/// Cactus pair with diameters i and j < i and equal edge-polytope volume.
/// Throws InvalidArgument for i < 8.
CounterexamplePair build_counterexample_pair(std::int64_t i);

struct SweepRow {
  std::uint64_t mask = 0;  ///< bit a set: arc a reversed
  ExtendedDistance diameter;
  RationalVolume volume;
};

/// Diameter and volume of each of the 2^m orientations reachable by reversals.
std::vector<SweepRow> orientation_sweep(const Digraph& d, const VolumeOptions& options = {});

}  // namespace revdiam
