#include "fuzzlat/grade_lattices.hpp"

#include "fuzzlat/errors.hpp"

#include <algorithm>

namespace fuzzlat {

Interval Interval::make(Rat lo, Rat hi) {
  if (!in_unit(lo) || !in_unit(hi))
    fail(Errc::Range, "interval endpoint outside [0,1]");
  if (lo > hi)
    fail(Errc::EmptyAtom,
         "inverted interval [" + format_rat(lo) + "," + format_rat(hi) + "]");
  return Interval{std::move(lo), std::move(hi)};
}

RealSubset Interval::as_subset() const {
  return RealSubset::of(Atom::closed(lo, hi));
}

bool interval_leq(const Interval& a, const Interval& b) {
  return a.lo <= b.lo && a.hi <= b.hi;
}

Interval interval_join(const Interval& a, const Interval& b) {
  return Interval{rat_max(a.lo, b.lo), rat_max(a.hi, b.hi)};
}

Interval interval_meet(const Interval& a, const Interval& b) {
  return Interval{rat_min(a.lo, b.lo), rat_min(a.hi, b.hi)};
}

ClosedSubset::ClosedSubset(RealSubset inner) : inner_(std::move(inner)) {
  if (inner_.is_empty())
    fail(Errc::EmptySet, "closed-valued grade must be nonempty");
  if (!is_closed(inner_))
    fail(Errc::NotClosed, "set is not closed in [0,1]");
}

ClosedSubset ClosedSubset::of_interval(const Interval& iv) {
  return ClosedSubset(iv.as_subset());
}

ClosedSubset ClosedSubset::point(const Rat& value) {
  return ClosedSubset(RealSubset::of(Atom::point(value)));
}

MonotonePWA MonotonePWA::from_points(std::vector<std::pair<Rat, Rat>> points) {
  if (points.size() < 2 || points.front().first != 0 ||
      points.back().first != 1)
    fail(Errc::Range, "piecewise map must span [0,1]");
  bool strict = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!in_unit(points[i].second))
      fail(Errc::Range, "piecewise map value outside [0,1]");
    if (i > 0) {
      if (points[i - 1].first >= points[i].first)
        fail(Errc::Range, "piecewise map breakpoints must increase");
      if (points[i - 1].second > points[i].second)
        fail(Errc::Range, "piecewise map must be nondecreasing");
      strict = strict && points[i - 1].second < points[i].second;
    }
  }
  MonotonePWA m;
  m.points_ = std::move(points);
  m.strict_ = strict;
  return m;
}

MonotonePWA MonotonePWA::identity() {
  return from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
}

MonotonePWA MonotonePWA::constant(const Rat& value) {
  return from_points({{Rat(0), value}, {Rat(1), value}});
}

Rat MonotonePWA::eval(const Rat& t) const {
  if (!in_unit(t)) fail(Errc::Range, "argument outside [0,1]");
  auto it = std::lower_bound(
      points_.begin(), points_.end(), t,
      [](const std::pair<Rat, Rat>& p, const Rat& v) { return p.first < v; });
  if (it->first == t) return it->second;
  const auto& right = *it;
  const auto& left = *std::prev(it);
  return left.second + (right.second - left.second) * (t - left.first) /
                           (right.first - left.first);
}

std::pair<Rat, Rat> MonotonePWA::segment_map(const Rat& lo,
                                             const Rat& hi) const {
  const Rat vlo = eval(lo), vhi = eval(hi);
  if (lo == hi) return {Rat(0), vlo};
  const Rat slope = (vhi - vlo) / (hi - lo);
  return {slope, vlo - slope * lo};
}

std::vector<Rat> MonotonePWA::breakpoint_args() const {
  std::vector<Rat> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.first);
  return out;
}

Interval embed_unit(const Rat& t, UnitEmbed kind) {
  if (!in_unit(t)) fail(Errc::Range, "grade outside [0,1]");
  switch (kind) {
    case UnitEmbed::Diagonal: return Interval{t, t};
    case UnitEmbed::UpperTail: return Interval{t, Rat(1)};
    case UnitEmbed::LowerTail: return Interval{Rat(0), t};
  }
  fail(Errc::Internal, "unreachable embed kind");
}

void validate_embed_pair(const MonotonePWA& h1, const MonotonePWA& h2) {
  if (!h1.is_strict() && !h2.is_strict())
    fail(Errc::InvalidPair, "neither component map is strictly increasing");
  // h2 - h1 is affine between consecutive breakpoints of either map, so
  // comparing at all breakpoints covers every crossing.
  std::vector<Rat> args = merge_cuts(h1.breakpoint_args(), h2.breakpoint_args());
  for (const Rat& t : args)
    if (h1.eval(t) > h2.eval(t))
      fail(Errc::InvalidPair,
           "lower map exceeds upper map at t=" + format_rat(t));
}

Interval embed_unit_pair(const Rat& t, const MonotonePWA& h1,
                         const MonotonePWA& h2) {
  validate_embed_pair(h1, h2);
  return Interval::make(h1.eval(t), h2.eval(t));
}

RealSubset xi(const Interval& iv) {
  std::vector<Atom> parts;
  parts.push_back(Atom::closed(Rat(0), iv.lo, Tag::QOnly));
  if (iv.hi > 0) parts.push_back(Atom::closed(Rat(0), iv.hi, Tag::IOnly));
  return RealSubset::canonicalize(parts);
}

namespace {

void require_nonempty(const RealSubset& s, const char* side) {
  if (s.is_empty())
    fail(Errc::EmptySet, std::string(side) + " operand must be nonempty");
}

}  // namespace

bool s_order(const RealSubset& s, const RealSubset& t) {
  require_nonempty(s, "left");
  require_nonempty(t, "right");
  const Bounds bs = bounds(s), bt = bounds(t);
  if (bs.sup > bt.sup || bs.inf > bt.inf) return false;
  const RealSubset window = RealSubset::closed_span(bt.inf, bs.sup);
  return subset_of(set_intersect(s, window), t);
}

RealSubset s_union(const RealSubset& s, const RealSubset& t) {
  require_nonempty(s, "left");
  require_nonempty(t, "right");
  const Bounds bs = bounds(s), bt = bounds(t);
  if (bs.inf <= bt.inf)
    return set_union(set_intersect(s, RealSubset::closed_span(bt.inf, bs.sup)), t);
  return set_union(set_intersect(t, RealSubset::closed_span(bs.inf, bt.sup)), s);
}

RealSubset s_inter(const RealSubset& s, const RealSubset& t) {
  require_nonempty(s, "left");
  require_nonempty(t, "right");
  const Bounds bs = bounds(s), bt = bounds(t);
  if (bs.inf <= bt.inf)
    return set_intersect(s, set_union(RealSubset::closed_span(bs.inf, bt.inf), t));
  return set_intersect(t, set_union(RealSubset::closed_span(bt.inf, bs.inf), s));
}

namespace {

ClosedSubset as_closed_result(RealSubset raw, const char* op) {
  if (raw.is_empty() || !is_closed(raw))
    fail(Errc::Internal,
         std::string(op) + " left the class of nonempty closed sets");
  return ClosedSubset(std::move(raw));
}

}  // namespace

ClosedSubset closed_join(const ClosedSubset& s, const ClosedSubset& t) {
  return as_closed_result(s_union(s.set(), t.set()), "closed join");
}

ClosedSubset closed_meet(const ClosedSubset& s, const ClosedSubset& t) {
  return as_closed_result(s_inter(s.set(), t.set()), "closed meet");
}

bool closed_leq(const ClosedSubset& s, const ClosedSubset& t) {
  return s_order(s.set(), t.set());
}

RealSubset hesitant_union(const RealSubset& s, const RealSubset& t) {
  require_nonempty(s, "left");
  require_nonempty(t, "right");
  const Rat threshold = rat_max(bounds(s).inf, bounds(t).inf);
  return set_intersect(set_union(s, t),
                       RealSubset::closed_span(threshold, Rat(1)));
}

RealSubset hesitant_inter(const RealSubset& s, const RealSubset& t) {
  require_nonempty(s, "left");
  require_nonempty(t, "right");
  const Rat threshold = rat_min(bounds(s).sup, bounds(t).sup);
  return set_intersect(set_union(s, t),
                       RealSubset::closed_span(Rat(0), threshold));
}

}  // namespace fuzzlat
