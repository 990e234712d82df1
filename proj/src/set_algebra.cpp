#include "fuzzlat/set_algebra.hpp"

#include "fuzzlat/errors.hpp"

#include <algorithm>
#include <optional>

namespace fuzzlat {

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::All: return "All";
    case Tag::QOnly: return "QOnly";
    case Tag::IOnly: return "IOnly";
  }
  return "?";
}

Atom Atom::make(Rat lo, Rat hi, bool lo_closed, bool hi_closed, Tag tag) {
  if (!in_unit(lo) || !in_unit(hi))
    fail(Errc::Range, "atom endpoint outside [0,1]: [" + format_rat(lo) + "," +
                          format_rat(hi) + "]");
  if (lo > hi)
    fail(Errc::EmptyAtom,
         "inverted interval [" + format_rat(lo) + "," + format_rat(hi) + "]");
  if (lo == hi) {
    if (!lo_closed || !hi_closed)
      fail(Errc::EmptyAtom, "degenerate half-open interval at " + format_rat(lo));
    if (tag == Tag::IOnly)
      fail(Errc::EmptyAtom,
           "irrational-only point atom at " + format_rat(lo) + " is empty");
    tag = Tag::All;  // a rational point's Q-part is the point itself
  }
  return Atom{std::move(lo), std::move(hi), lo_closed, hi_closed, tag};
}

Atom Atom::point(Rat value) {
  return make(value, std::move(value), true, true, Tag::All);
}

Atom Atom::closed(Rat lo, Rat hi, Tag tag) {
  return make(std::move(lo), std::move(hi), true, true, tag);
}

namespace {

bool tag_has_q(Tag t) { return t != Tag::IOnly; }
bool tag_has_i(Tag t) { return t != Tag::QOnly; }

SliceCoverage coverage_over(const std::vector<Atom>& atoms,
                            const std::vector<Rat>& cuts) {
  SliceCoverage cov;
  cov.point_in.assign(cuts.size(), 0);
  if (!cuts.empty()) {
    cov.gap_q.assign(cuts.size() - 1, 0);
    cov.gap_i.assign(cuts.size() - 1, 0);
  }
  for (const Atom& a : atoms) {
    const auto first =
        std::lower_bound(cuts.begin(), cuts.end(), a.lo) - cuts.begin();
    for (std::size_t j = first; j < cuts.size() && cuts[j] <= a.hi; ++j) {
      if (atom_contains_rational(a, cuts[j])) cov.point_in[j] = 1;
      // Gap (cuts[j], cuts[j+1]) is covered iff it lies inside the span;
      // openness flags are irrelevant for an open gap.
      if (j + 1 < cuts.size() && a.lo <= cuts[j] && cuts[j + 1] <= a.hi) {
        if (tag_has_q(a.tag)) cov.gap_q[j] = 1;
        if (tag_has_i(a.tag)) cov.gap_i[j] = 1;
      }
    }
  }
  return cov;
}

// Assembles canonical atoms from elementary-piece coverage. Interior points
// attach to the left run when possible; IOnly runs pass through excluded
// rational points (an irrational-only atom never contains them) and break at
// included ones.
std::vector<Atom> merge_pieces(const std::vector<Rat>& cuts,
                               const SliceCoverage& cov) {
  struct Run {
    Rat lo;
    bool lo_closed;
    Tag tag;
    Rat hi;
    bool hi_closed;
  };
  std::vector<Atom> out;
  std::optional<Run> cur;
  std::optional<Rat> pending;

  auto flush_cur = [&] {
    if (cur) {
      out.push_back(Atom{cur->lo, cur->hi, cur->lo_closed, cur->hi_closed, cur->tag});
      cur.reset();
    }
  };
  auto flush_pending = [&] {
    if (pending) {
      out.push_back(Atom{*pending, *pending, true, true, Tag::All});
      pending.reset();
    }
  };

  for (std::size_t j = 0; j < cuts.size(); ++j) {
    if (cov.point_in[j]) {
      if (cur && cur->tag != Tag::IOnly) {
        cur->hi_closed = true;  // cur reaches cuts[j] by construction
      } else {
        flush_cur();
        pending = cuts[j];
      }
    } else if (cur && cur->tag != Tag::IOnly) {
      flush_cur();
    }
    if (j + 1 == cuts.size()) break;

    const bool q = cov.gap_q[j], i = cov.gap_i[j];
    if (!q && !i) {
      flush_cur();
      flush_pending();
      continue;
    }
    const Tag tag = q && i ? Tag::All : q ? Tag::QOnly : Tag::IOnly;
    if (cur && cur->tag == tag) {
      cur->hi = cuts[j + 1];
      cur->hi_closed = false;
    } else {
      flush_cur();
      bool lo_closed = false;
      if (pending) {
        if (tag == Tag::IOnly) {
          flush_pending();
        } else {
          lo_closed = true;
          pending.reset();
        }
      }
      cur = Run{cuts[j], lo_closed, tag, cuts[j + 1], false};
    }
  }
  flush_cur();
  flush_pending();
  return out;
}

std::vector<Rat> endpoints_of(const std::vector<Atom>& atoms) {
  std::vector<Rat> cuts;
  cuts.reserve(atoms.size() * 2);
  for (const Atom& a : atoms) {
    cuts.push_back(a.lo);
    cuts.push_back(a.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

RealSubset from_pieces(const std::vector<Rat>& cuts, const SliceCoverage& cov) {
  return detail::from_canonical_atoms(merge_pieces(cuts, cov));
}

}  // namespace

namespace detail {
RealSubset from_canonical_atoms(std::vector<Atom> atoms) {
  RealSubset out;
  out.atoms_ = std::move(atoms);
  return out;
}
}  // namespace detail

bool atom_contains_rational(const Atom& a, const Rat& q) {
  if (a.tag == Tag::IOnly) return false;
  if (q < a.lo || q > a.hi) return false;
  if (q == a.lo && !a.lo_closed) return false;
  if (q == a.hi && !a.hi_closed) return false;
  return true;
}

std::vector<Rat> merge_cuts(std::vector<Rat> a, const std::vector<Rat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Rat> atom_endpoints(const RealSubset& a) {
  return endpoints_of(a.atoms());
}

SliceCoverage slice_coverage(const RealSubset& a, const std::vector<Rat>& cuts) {
  return coverage_over(a.atoms(), cuts);
}

RealSubset RealSubset::canonicalize(const std::vector<Atom>& raw) {
  if (raw.empty()) return {};
  const std::vector<Rat> cuts = endpoints_of(raw);
  const SliceCoverage cov = coverage_over(raw, cuts);
  return detail::from_canonical_atoms(merge_pieces(cuts, cov));
}

RealSubset RealSubset::closed_span(const Rat& lo, const Rat& hi) {
  if (lo > hi) return {};
  return of(Atom::closed(lo, hi));
}

RealSubset set_union(const RealSubset& a, const RealSubset& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const std::vector<Rat> cuts =
      merge_cuts(atom_endpoints(a), atom_endpoints(b));
  SliceCoverage ca = slice_coverage(a, cuts);
  const SliceCoverage cb = slice_coverage(b, cuts);
  for (std::size_t j = 0; j < cuts.size(); ++j) ca.point_in[j] |= cb.point_in[j];
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    ca.gap_q[j] |= cb.gap_q[j];
    ca.gap_i[j] |= cb.gap_i[j];
  }
  return from_pieces(cuts, ca);
}

RealSubset set_intersect(const RealSubset& a, const RealSubset& b) {
  if (a.is_empty() || b.is_empty()) return {};
  const std::vector<Rat> cuts =
      merge_cuts(atom_endpoints(a), atom_endpoints(b));
  SliceCoverage ca = slice_coverage(a, cuts);
  const SliceCoverage cb = slice_coverage(b, cuts);
  for (std::size_t j = 0; j < cuts.size(); ++j) ca.point_in[j] &= cb.point_in[j];
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    ca.gap_q[j] &= cb.gap_q[j];
    ca.gap_i[j] &= cb.gap_i[j];
  }
  return from_pieces(cuts, ca);
}

RealSubset set_complement(const RealSubset& a) {
  std::vector<Rat> cuts = merge_cuts(atom_endpoints(a), {Rat(0), Rat(1)});
  SliceCoverage c = slice_coverage(a, cuts);
  for (auto& v : c.point_in) v = !v;
  for (auto& v : c.gap_q) v = !v;
  for (auto& v : c.gap_i) v = !v;
  return from_pieces(cuts, c);
}

RealSubset set_closure(const RealSubset& a) {
  std::vector<Atom> closed;
  closed.reserve(a.atoms().size());
  for (const Atom& at : a.atoms()) closed.push_back(Atom::closed(at.lo, at.hi));
  return RealSubset::canonicalize(closed);
}

bool is_closed(const RealSubset& a) { return a == set_closure(a); }

bool subset_of(const RealSubset& a, const RealSubset& b) {
  return set_intersect(a, set_complement(b)).is_empty();
}

bool contains(const RealSubset& a, const Rat& q) {
  if (!in_unit(q)) fail(Errc::Range, "point outside [0,1]: " + format_rat(q));
  for (const Atom& at : a.atoms()) {
    if (at.lo > q) break;
    if (atom_contains_rational(at, q)) return true;
  }
  return false;
}

Bounds bounds(const RealSubset& a) {
  if (a.is_empty()) fail(Errc::EmptySet, "bounds of the empty set");
  Bounds b;
  b.inf = a.atoms().front().lo;
  b.sup = a.atoms().back().hi;
  b.inf_attained = contains(a, b.inf);
  b.sup_attained = contains(a, b.sup);
  return b;
}

}  // namespace fuzzlat
