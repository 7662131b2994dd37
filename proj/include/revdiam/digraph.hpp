#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace revdiam {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using Weight = std::int64_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  Weight weight = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/**
 * Shortest-path length that may be infinite.
 *
 * Infinite compares greater than every finite value and absorbs addition.
 */
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() = default;  // Infinite
  constexpr explicit ExtendedDistance(std::int64_t v) : value_(v) {}

  static constexpr ExtendedDistance finite(std::int64_t v) { return ExtendedDistance(v); }
  static constexpr ExtendedDistance infinite() { return ExtendedDistance(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: is_finite().
  constexpr std::int64_t value() const { return *value_; }

  constexpr bool at_most(std::int64_t bound) const { return value_ && *value_ <= bound; }

  friend constexpr ExtendedDistance operator+(ExtendedDistance a, ExtendedDistance b) {
    if (!a.value_ || !b.value_) return {};
    return ExtendedDistance(*a.value_ + *b.value_);
  }

  friend constexpr bool operator==(const ExtendedDistance&, const ExtendedDistance&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedDistance& a, const ExtendedDistance& b) {
    if (a.value_ && b.value_) return *a.value_ <=> *b.value_;
    if (!a.value_ && !b.value_) return std::strong_ordering::equal;
    return a.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::optional<std::int64_t> value_;
};

/**
 * Weighted directed multigraph with stable arc identities.
 *
 * Arc ids are positions in the arc list. Parallel arcs are allowed, self-loops
 * and negative weights are rejected.
 */
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(VertexId vertex_count);
  Digraph(VertexId vertex_count, std::vector<Arc> arcs);
  Digraph(VertexId vertex_count, std::initializer_list<Arc> arcs);

  ArcId add_arc(VertexId tail, VertexId head, Weight weight = 1);

  VertexId vertex_count() const { return n_; }
  ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }
  const Arc& arc(ArcId id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  std::span<const Arc> arcs() const { return arcs_; }

  /// True when every arc has weight 1.
  bool unit_weights() const;
  Weight total_weight() const;

  /// Swaps tail and head of one arc in place.
  void reverse_arc(ArcId id);

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_arc(const Arc& a) const;

  VertexId n_ = 0;
  std::vector<Arc> arcs_;
};

/// Sorted, duplicate-free set of arc ids.
class ReversalSet {
 public:
  ReversalSet() = default;
  /// Sorts and deduplicates. Throws InvalidArgument on negative ids.
  explicit ReversalSet(std::vector<ArcId> ids);
  ReversalSet(std::initializer_list<ArcId> ids) : ReversalSet(std::vector<ArcId>(ids)) {}

  /// Throws InvalidArgument if some id is not an arc of d.
  void validate(const Digraph& d) const;

  std::span<const ArcId> ids() const { return ids_; }
  std::size_t cardinality() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(ArcId id) const;
  Weight total_weight(const Digraph& d) const;

  friend bool operator==(const ReversalSet&, const ReversalSet&) = default;
  friend auto operator<=>(const ReversalSet& a, const ReversalSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<ArcId> ids_;
};

/// Copy of d with tail/head swapped on exactly the arcs of f.
Digraph reverse_arcs(const Digraph& d, const ReversalSet& f);

/// Reverses every arc.
Digraph reverse_all(const Digraph& d);

}  // namespace revdiam
