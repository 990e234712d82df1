#pragma once

#include "fuzzlat/set_algebra.hpp"

#include <utility>
#include <vector>

namespace fuzzlat {

// Closed subinterval of [0,1].
struct Interval {
  Rat lo;
  Rat hi;

  static Interval make(Rat lo, Rat hi);  // validates 0 <= lo <= hi <= 1
  RealSubset as_subset() const;

  bool operator==(const Interval&) const = default;
};

// Componentwise order and lattice operators on closed intervals.
bool interval_leq(const Interval& a, const Interval& b);
Interval interval_join(const Interval& a, const Interval& b);
Interval interval_meet(const Interval& a, const Interval& b);

// Nonempty closed subset of [0,1].
class ClosedSubset {
 public:
  explicit ClosedSubset(RealSubset inner);  // EmptySet / NotClosed on violation
  static ClosedSubset of_interval(const Interval& iv);
  static ClosedSubset point(const Rat& value);

  const RealSubset& set() const { return inner_; }
  bool operator==(const ClosedSubset&) const = default;

 private:
  RealSubset inner_;
};

// Continuous piecewise-affine nondecreasing map [0,1] -> [0,1], given by its
// breakpoints. Strictness is derived from the values.
class MonotonePWA {
 public:
  // points must start at t=0, end at t=1, have strictly increasing t and
  // nondecreasing values within [0,1].
  static MonotonePWA from_points(std::vector<std::pair<Rat, Rat>> points);
  static MonotonePWA identity();
  static MonotonePWA constant(const Rat& value);

  Rat eval(const Rat& t) const;
  bool is_strict() const { return strict_; }
  const std::vector<std::pair<Rat, Rat>>& points() const { return points_; }

  // (slope, offset) of the segment spanning [lo,hi]; requires that no
  // breakpoint lies strictly inside (lo,hi).
  std::pair<Rat, Rat> segment_map(const Rat& lo, const Rat& hi) const;
  std::vector<Rat> breakpoint_args() const;

  bool operator==(const MonotonePWA&) const = default;

 private:
  std::vector<std::pair<Rat, Rat>> points_;
  bool strict_ = false;
};

// Embeddings of [0,1] into the interval lattice: t -> [t,t], [t,1], [0,t].
enum class UnitEmbed { Diagonal, UpperTail, LowerTail };

Interval embed_unit(const Rat& t, UnitEmbed kind);

// Generic embedding t -> [h1(t), h2(t)]. Requires h1 <= h2 pointwise and at
// least one of them strictly increasing (InvalidPair otherwise).
void validate_embed_pair(const MonotonePWA& h1, const MonotonePWA& h2);
Interval embed_unit_pair(const Rat& t, const MonotonePWA& h1,
                         const MonotonePWA& h2);

// Splits an interval into the rational part below lo and the irrational part
// below hi: ([0,lo] cap Q) with ([0,hi] cap I).
RealSubset xi(const Interval& iv);

// Order on nonempty subsets via inf, sup and window containment.
bool s_order(const RealSubset& s, const RealSubset& t);

// Branching join/meet on nonempty subsets; ties on the infima take the first
// branch. s_inter may return the empty set on non-closed inputs.
RealSubset s_union(const RealSubset& s, const RealSubset& t);
RealSubset s_inter(const RealSubset& s, const RealSubset& t);

// The same operators restricted to nonempty closed sets, where they are a
// lattice; a non-closed or empty result here is an internal bug.
ClosedSubset closed_join(const ClosedSubset& s, const ClosedSubset& t);
ClosedSubset closed_meet(const ClosedSubset& s, const ClosedSubset& t);
bool closed_leq(const ClosedSubset& s, const ClosedSubset& t);

// Hesitant operators: filtered unions at the max-inf / min-sup thresholds.
// hesitant_union always agrees with s_union; hesitant_inter does not form a
// meet for any order.
RealSubset hesitant_union(const RealSubset& s, const RealSubset& t);
RealSubset hesitant_inter(const RealSubset& s, const RealSubset& t);

}  // namespace fuzzlat
