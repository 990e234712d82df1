#include "fuzzlat/piecewise.hpp"

#include "fuzzlat/errors.hpp"

#include <algorithm>

namespace fuzzlat {

namespace {

void validate_decomposition(const FnDecomposition& d) {
  const std::size_t m = d.cuts.size();
  if (m < 2 || d.cuts.front() != 0 || d.cuts.back() != 1 ||
      d.point_values.size() != m || d.gap_q.size() != m - 1 ||
      d.gap_i.size() != m - 1)
    fail(Errc::Internal, "malformed grade-function decomposition");
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (d.cuts[j] >= d.cuts[j + 1])
      fail(Errc::Internal, "decomposition cuts not strictly increasing");
    for (const AffineMap* map : {&d.gap_q[j], &d.gap_i[j]}) {
      if (!in_unit(map->eval(d.cuts[j])) || !in_unit(map->eval(d.cuts[j + 1])))
        fail(Errc::Range, "grade function leaves [0,1] on (" +
                              format_rat(d.cuts[j]) + "," +
                              format_rat(d.cuts[j + 1]) + ")");
    }
  }
  for (const Rat& v : d.point_values)
    if (!in_unit(v)) fail(Errc::Range, "grade value outside [0,1]");
}

}  // namespace

PiecewiseFn PiecewiseFn::assemble(const FnDecomposition& d0) {
  validate_decomposition(d0);

  // Drop interior cuts where nothing changes: both side maps continue and the
  // cut point itself sits on the rational-side map.
  FnDecomposition d;
  d.cuts.push_back(d0.cuts.front());
  d.point_values.push_back(d0.point_values.front());
  for (std::size_t j = 1; j < d0.cuts.size(); ++j) {
    const bool last = j + 1 == d0.cuts.size();
    const bool spurious = !last && d0.gap_q[j - 1] == d0.gap_q[j] &&
                          d0.gap_i[j - 1] == d0.gap_i[j] &&
                          d0.point_values[j] == d0.gap_q[j].eval(d0.cuts[j]);
    if (spurious) continue;
    d.gap_q.push_back(d0.gap_q[j - 1]);
    d.gap_i.push_back(d0.gap_i[j - 1]);
    d.cuts.push_back(d0.cuts[j]);
    d.point_values.push_back(d0.point_values[j]);
  }

  const std::size_t m = d.cuts.size();
  std::vector<char> left_ok(m, 0), right_ok(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0 && d.point_values[j] == d.gap_q[j - 1].eval(d.cuts[j]))
      left_ok[j] = 1;
    else if (j + 1 < m && d.point_values[j] == d.gap_q[j].eval(d.cuts[j]))
      right_ok[j] = 1;
  }

  PiecewiseFn out{raw_t{}};
  for (std::size_t j = 0; j < m; ++j) {
    if (!left_ok[j] && !right_ok[j])
      out.pieces_.push_back(
          {Atom::point(d.cuts[j]), AffineMap::constant(d.point_values[j])});
    if (j + 1 == m) break;
    const bool lo_closed = right_ok[j];
    const bool hi_closed = left_ok[j + 1];
    if (d.gap_q[j] == d.gap_i[j]) {
      out.pieces_.push_back({Atom::make(d.cuts[j], d.cuts[j + 1], lo_closed,
                                        hi_closed, Tag::All),
                             d.gap_q[j]});
    } else {
      out.pieces_.push_back({Atom::make(d.cuts[j], d.cuts[j + 1], lo_closed,
                                        hi_closed, Tag::QOnly),
                             d.gap_q[j]});
      out.pieces_.push_back(
          {Atom::make(d.cuts[j], d.cuts[j + 1], false, false, Tag::IOnly),
           d.gap_i[j]});
    }
  }
  return out;
}

PiecewiseFn PiecewiseFn::constant(const Rat& v) {
  FnDecomposition d;
  d.cuts = {Rat(0), Rat(1)};
  d.point_values = {v, v};
  d.gap_q = {AffineMap::constant(v)};
  d.gap_i = d.gap_q;
  return assemble(d);
}

PiecewiseFn PiecewiseFn::identity() {
  FnDecomposition d;
  d.cuts = {Rat(0), Rat(1)};
  d.point_values = {Rat(0), Rat(1)};
  d.gap_q = {AffineMap::identity()};
  d.gap_i = d.gap_q;
  return assemble(d);
}

Rat PiecewiseFn::eval(const Rat& t) const {
  if (!in_unit(t)) fail(Errc::Range, "argument outside [0,1]");
  for (const Piece& p : pieces_)
    if (atom_contains_rational(p.atom, t)) return p.map.eval(t);
  fail(Errc::Internal, "pieces fail to cover " + format_rat(t));
}

std::vector<Rat> fn_cuts(const PiecewiseFn& f) {
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (const Piece& p : f.pieces()) {
    cuts.push_back(p.atom.lo);
    cuts.push_back(p.atom.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

FnDecomposition decompose(const PiecewiseFn& f, std::vector<Rat> cuts) {
  FnDecomposition d;
  d.cuts = std::move(cuts);
  const std::size_t m = d.cuts.size();
  d.point_values.reserve(m);
  for (const Rat& c : d.cuts) d.point_values.push_back(f.eval(c));
  d.gap_q.assign(m - 1, AffineMap::constant(Rat(0)));
  d.gap_i.assign(m - 1, AffineMap::constant(Rat(0)));
  std::vector<char> has_q(m - 1, 0), has_i(m - 1, 0);
  for (const Piece& p : f.pieces()) {
    if (p.atom.is_point()) continue;
    const auto first = std::lower_bound(d.cuts.begin(), d.cuts.end(),
                                        p.atom.lo) -
                       d.cuts.begin();
    for (std::size_t j = first; j + 1 < m && d.cuts[j + 1] <= p.atom.hi; ++j) {
      if (p.atom.tag != Tag::IOnly) {
        d.gap_q[j] = p.map;
        has_q[j] = 1;
      }
      if (p.atom.tag != Tag::QOnly) {
        d.gap_i[j] = p.map;
        has_i[j] = 1;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (!has_q[j] || !has_i[j])
      fail(Errc::Internal, "grade function pieces do not partition [0,1]");
  return d;
}

namespace {

AffineMap dominant(const AffineMap& a, const AffineMap& b, const Rat& lo,
                   const Rat& hi, bool is_max) {
  const Rat alo = a.eval(lo), blo = b.eval(lo);
  const Rat ahi = a.eval(hi), bhi = b.eval(hi);
  if (is_max) return alo >= blo && ahi >= bhi ? a : b;
  return alo <= blo && ahi <= bhi ? a : b;
}

PiecewiseFn pw_extremum(const PiecewiseFn& f, const PiecewiseFn& g,
                        bool is_max) {
  std::vector<Rat> cuts = merge_cuts(fn_cuts(f), fn_cuts(g));
  FnDecomposition df = decompose(f, cuts);
  FnDecomposition dg = decompose(g, cuts);

  // split any gap where the two affine maps of one side cross strictly inside
  std::vector<Rat> crossings;
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    for (const auto& [a, b] : {std::pair{df.gap_q[j], dg.gap_q[j]},
                               std::pair{df.gap_i[j], dg.gap_i[j]}}) {
      if (a.slope == b.slope) continue;
      const Rat x = (b.offset - a.offset) / (a.slope - b.slope);
      if (cuts[j] < x && x < cuts[j + 1]) crossings.push_back(x);
    }
  }
  if (!crossings.empty()) {
    cuts = merge_cuts(std::move(cuts), crossings);
    df = decompose(f, cuts);
    dg = decompose(g, cuts);
  }

  FnDecomposition out;
  out.cuts = cuts;
  out.point_values.reserve(cuts.size());
  for (std::size_t j = 0; j < cuts.size(); ++j)
    out.point_values.push_back(is_max
                                   ? rat_max(df.point_values[j], dg.point_values[j])
                                   : rat_min(df.point_values[j], dg.point_values[j]));
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    out.gap_q.push_back(
        dominant(df.gap_q[j], dg.gap_q[j], cuts[j], cuts[j + 1], is_max));
    out.gap_i.push_back(
        dominant(df.gap_i[j], dg.gap_i[j], cuts[j], cuts[j + 1], is_max));
  }
  return PiecewiseFn::assemble(out);
}

}  // namespace

PiecewiseFn pw_max(const PiecewiseFn& f, const PiecewiseFn& g) {
  return pw_extremum(f, g, true);
}

PiecewiseFn pw_min(const PiecewiseFn& f, const PiecewiseFn& g) {
  return pw_extremum(f, g, false);
}

bool pw_leq(const PiecewiseFn& f, const PiecewiseFn& g) {
  return pw_min(f, g) == f;
}

PiecewiseFn indicator(const RealSubset& s) {
  FnDecomposition d;
  d.cuts = merge_cuts(atom_endpoints(s), {Rat(0), Rat(1)});
  const SliceCoverage cov = slice_coverage(s, d.cuts);
  for (std::size_t j = 0; j < d.cuts.size(); ++j)
    d.point_values.push_back(Rat(cov.point_in[j] ? 1 : 0));
  for (std::size_t j = 0; j + 1 < d.cuts.size(); ++j) {
    d.gap_q.push_back(AffineMap::constant(Rat(cov.gap_q[j] ? 1 : 0)));
    d.gap_i.push_back(AffineMap::constant(Rat(cov.gap_i[j] ? 1 : 0)));
  }
  return PiecewiseFn::assemble(d);
}

PiecewiseFn set_profile(const RealSubset& s) {
  const Rat m = bounds(s).inf;
  FnDecomposition d;
  d.cuts = merge_cuts(atom_endpoints(s), {Rat(0), Rat(1), m});
  const SliceCoverage cov = slice_coverage(s, d.cuts);
  for (std::size_t j = 0; j < d.cuts.size(); ++j) {
    const Rat& t = d.cuts[j];
    d.point_values.push_back(t <= m ? m : cov.point_in[j] ? t : Rat(0));
  }
  for (std::size_t j = 0; j + 1 < d.cuts.size(); ++j) {
    const bool below = d.cuts[j + 1] <= m;
    d.gap_q.push_back(below ? AffineMap::constant(m)
                      : cov.gap_q[j] ? AffineMap::identity()
                                     : AffineMap::constant(Rat(0)));
    d.gap_i.push_back(below ? AffineMap::constant(m)
                      : cov.gap_i[j] ? AffineMap::identity()
                                     : AffineMap::constant(Rat(0)));
  }
  return PiecewiseFn::assemble(d);
}

PiecewiseFn closed_profile(const ClosedSubset& c) { return set_profile(c.set()); }

PiecewiseFn warped_profile(const ClosedSubset& c, const MonotonePWA& f) {
  if (!f.is_strict() || f.eval(Rat(0)) != 0 || f.eval(Rat(1)) != 1)
    fail(Errc::InvalidF,
         "warp must be strictly increasing with f(0)=0 and f(1)=1");
  const Rat m = bounds(c.set()).inf;
  const Rat fm = f.eval(m);
  FnDecomposition d;
  d.cuts = merge_cuts(atom_endpoints(c.set()),
                      merge_cuts(f.breakpoint_args(), {Rat(0), Rat(1), m}));
  const SliceCoverage cov = slice_coverage(c.set(), d.cuts);
  for (std::size_t j = 0; j < d.cuts.size(); ++j) {
    const Rat& t = d.cuts[j];
    d.point_values.push_back(t <= m ? fm : cov.point_in[j] ? f.eval(t) : Rat(0));
  }
  for (std::size_t j = 0; j + 1 < d.cuts.size(); ++j) {
    AffineMap map = AffineMap::constant(Rat(0));
    if (d.cuts[j + 1] <= m) {
      map = AffineMap::constant(fm);
    } else if (cov.gap_q[j]) {
      const auto [slope, offset] = f.segment_map(d.cuts[j], d.cuts[j + 1]);
      map = AffineMap{slope, offset};
    }
    d.gap_q.push_back(map);
    d.gap_i.push_back(map);
  }
  return PiecewiseFn::assemble(d);
}

PiecewiseFn constant_grade(const Rat& a) { return PiecewiseFn::constant(a); }

PiecewiseFn point_indicator(const Rat& a) {
  return indicator(RealSubset::of(Atom::point(a)));
}

PiecewiseFn below_indicator(const Rat& a) {
  return indicator(RealSubset::closed_span(Rat(0), a));
}

std::string describe(const PiecewiseFn& f) {
  std::string out;
  for (const Piece& p : f.pieces()) {
    if (!out.empty()) out += "; ";
    if (p.atom.is_point()) {
      out += "{" + format_rat(p.atom.lo) + "}";
    } else {
      out += p.atom.lo_closed ? "[" : "(";
      out += format_rat(p.atom.lo) + "," + format_rat(p.atom.hi);
      out += p.atom.hi_closed ? "]" : ")";
      if (p.atom.tag == Tag::QOnly) out += "&QQ";
      if (p.atom.tag == Tag::IOnly) out += "&II";
    }
    out += " -> ";
    if (p.map.slope == 0) {
      out += format_rat(p.map.offset);
    } else if (p.map == AffineMap::identity()) {
      out += "t";
    } else {
      out += format_rat(p.map.slope) + "*t";
      if (p.map.offset > 0) out += "+" + format_rat(p.map.offset);
      if (p.map.offset < 0) out += format_rat(p.map.offset);
    }
  }
  return out.empty() ? "<none>" : out;
}

}  // namespace fuzzlat
