#include "fuzzlat/fuzzy.hpp"

#include <set>

namespace fuzzlat {

Fs fs_join(const Fs& a, const Fs& b) {
  return pointwise(a, b, [](const Rat& x, const Rat& y) { return rat_max(x, y); });
}

Fs fs_meet(const Fs& a, const Fs& b) {
  return pointwise(a, b, [](const Rat& x, const Rat& y) { return rat_min(x, y); });
}

bool fs_leq(const Fs& a, const Fs& b) {
  return pointwise_leq(a, b, [](const Rat& x, const Rat& y) { return x <= y; });
}

Ivfs ivfs_join(const Ivfs& a, const Ivfs& b) { return pointwise(a, b, interval_join); }
Ivfs ivfs_meet(const Ivfs& a, const Ivfs& b) { return pointwise(a, b, interval_meet); }
bool ivfs_leq(const Ivfs& a, const Ivfs& b) { return pointwise_leq(a, b, interval_leq); }

Svfs svfs_join(const Svfs& a, const Svfs& b) { return pointwise(a, b, set_union); }

Svfs svfs_meet(const Svfs& a, const Svfs& b, bool allow_empty) {
  require_same_universe(a, b);
  std::vector<RealSubset> grades;
  grades.reserve(a.grades().size());
  for (std::size_t i = 0; i < a.grades().size(); ++i) {
    RealSubset g = set_intersect(a.grade(i), b.grade(i));
    if (g.is_empty() && !allow_empty)
      fail(Errc::EmptyGrade, "meet produced an empty grade at label '" +
                                 a.universe().labels()[i] + "'");
    grades.push_back(std::move(g));
  }
  return Svfs(a.universe(), std::move(grades));
}

bool svfs_subset_leq(const Svfs& a, const Svfs& b) {
  return pointwise_leq(a, b, subset_of);
}

bool svfs_s_leq(const Svfs& a, const Svfs& b) {
  return pointwise_leq(a, b, s_order);
}

Cvfs cvfs_join(const Cvfs& a, const Cvfs& b) { return pointwise(a, b, closed_join); }
Cvfs cvfs_meet(const Cvfs& a, const Cvfs& b) { return pointwise(a, b, closed_meet); }
bool cvfs_leq(const Cvfs& a, const Cvfs& b) { return pointwise_leq(a, b, closed_leq); }

T2fs t2fs_join(const T2fs& a, const T2fs& b) { return pointwise(a, b, pw_max); }
T2fs t2fs_meet(const T2fs& a, const T2fs& b) { return pointwise(a, b, pw_min); }
bool t2fs_leq(const T2fs& a, const T2fs& b) { return pointwise_leq(a, b, pw_leq); }

Ivfs as_diagonal_intervals(const Fs& a) {
  return lift<Rat, Interval>(a, [](const Rat& t) { return embed_unit(t, UnitEmbed::Diagonal); });
}

Ivfs as_upper_intervals(const Fs& a) {
  return lift<Rat, Interval>(a, [](const Rat& t) { return embed_unit(t, UnitEmbed::UpperTail); });
}

Ivfs as_lower_intervals(const Fs& a) {
  return lift<Rat, Interval>(a, [](const Rat& t) { return embed_unit(t, UnitEmbed::LowerTail); });
}

Ivfs as_pair_intervals(const Fs& a, const MonotonePWA& h1, const MonotonePWA& h2) {
  validate_embed_pair(h1, h2);
  return lift<Rat, Interval>(a, [&](const Rat& t) {
    return Interval::make(h1.eval(t), h2.eval(t));
  });
}

Svfs as_singleton_sets(const Fs& a) {
  return lift<Rat, RealSubset>(a, [](const Rat& t) {
    return RealSubset::of(Atom::point(t));
  });
}

Svfs as_downsets(const Fs& a) {
  return lift<Rat, RealSubset>(a, [](const Rat& t) {
    return RealSubset::closed_span(Rat(0), t);
  });
}

Svfs intervals_as_sets(const Ivfs& a) {
  return lift<Interval, RealSubset>(a, [](const Interval& iv) { return iv.as_subset(); });
}

Cvfs intervals_as_closed(const Ivfs& a) {
  return lift<Interval, ClosedSubset>(a, ClosedSubset::of_interval);
}

Svfs split_intervals(const Ivfs& a) {
  return lift<Interval, RealSubset>(a, xi);
}

Svfs closed_as_sets(const Cvfs& a) {
  return lift<ClosedSubset, RealSubset>(a, [](const ClosedSubset& c) { return c.set(); });
}

T2fs as_constant_grades(const Fs& a) {
  return lift<Rat, PiecewiseFn>(a, constant_grade);
}

T2fs as_point_indicators(const Fs& a) {
  return lift<Rat, PiecewiseFn>(a, point_indicator);
}

T2fs as_below_indicators(const Fs& a) {
  return lift<Rat, PiecewiseFn>(a, below_indicator);
}

T2fs sets_as_indicators(const Svfs& a) {
  return lift<RealSubset, PiecewiseFn>(a, indicator);
}

T2fs closed_as_profiles(const Cvfs& a) {
  return lift<ClosedSubset, PiecewiseFn>(a, closed_profile);
}

T2fs closed_as_warped_profiles(const Cvfs& a, const MonotonePWA& f) {
  return lift<ClosedSubset, PiecewiseFn>(a, [&](const ClosedSubset& c) {
    return warped_profile(c, f);
  });
}

std::vector<std::size_t> cut(const Fs& a, const Rat& t) {
  if (!in_unit(t)) fail(Errc::Range, "cut level outside [0,1]");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.grades().size(); ++i)
    if (a.grade(i) >= t) out.push_back(i);
  return out;
}

CutFamily cut_family(const Fs& a) {
  std::set<Rat> levels;
  for (const Rat& g : a.grades())
    if (g > 0) levels.insert(g);
  CutFamily cf{a.universe(), {}, {}};
  for (const Rat& t : levels) {
    cf.thresholds.push_back(t);
    cf.sets.push_back(cut(a, t));
  }
  return cf;
}

Fs cut_reconstruct(const CutFamily& cf) {
  const std::size_t n = cf.base.size();
  if (cf.thresholds.size() != cf.sets.size())
    fail(Errc::InvalidNesting, "threshold/set count mismatch");
  for (std::size_t k = 0; k < cf.thresholds.size(); ++k) {
    if (!in_unit(cf.thresholds[k]) || cf.thresholds[k] == 0)
      fail(Errc::InvalidNesting, "thresholds must lie in (0,1]");
    if (k > 0 && cf.thresholds[k - 1] >= cf.thresholds[k])
      fail(Errc::InvalidNesting, "thresholds must strictly increase");
    for (const std::size_t i : cf.sets[k]) {
      if (i >= n) fail(Errc::InvalidNesting, "cut refers to an unknown label");
      if (k > 0 &&
          std::find(cf.sets[k - 1].begin(), cf.sets[k - 1].end(), i) ==
              cf.sets[k - 1].end())
        fail(Errc::InvalidNesting,
             "cut at a higher level is not contained in the lower one");
    }
  }
  std::vector<Rat> grades(n, Rat(0));
  for (std::size_t k = 0; k < cf.thresholds.size(); ++k)
    for (const std::size_t i : cf.sets[k]) grades[i] = cf.thresholds[k];
  return Fs(cf.base, std::move(grades));
}

}  // namespace fuzzlat
