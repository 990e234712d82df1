#include "fuzzlat/harness.hpp"

#include "fuzzlat/errors.hpp"
#include "fuzzlat/set_expr.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fuzzlat {

// --- generators -------------------------------------------------------------

long Gen::uniform(long lo, long hi) {
  return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat Gen::rat() {
  const long d = uniform(1, p_.denominator_bound);
  return make_rat(uniform(0, d), d);
}

Rat Gen::grid_rat(int denom) { return make_rat(uniform(0, denom), denom); }

Interval Gen::interval() {
  Rat a = rat(), b = rat();
  if (b < a) std::swap(a, b);
  return Interval::make(a, b);
}

Atom Gen::atom() {
  if (uniform(0, 4) == 0) return Atom::point(rat());
  Rat a = rat(), b = rat();
  if (b < a) std::swap(a, b);
  if (a == b) return Atom::point(a);
  const Tag tag = static_cast<Tag>(uniform(0, 2));
  return Atom::make(a, b, uniform(0, 1) == 1, uniform(0, 1) == 1, tag);
}

RealSubset Gen::subset() {
  const int n = static_cast<int>(uniform(0, p_.max_atoms));
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(atom());
  return RealSubset::canonicalize(atoms);
}

RealSubset Gen::nonempty_subset() {
  const int n = static_cast<int>(uniform(1, p_.max_atoms));
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(atom());
  return RealSubset::canonicalize(atoms);
}

ClosedSubset Gen::closed_subset() {
  const int n = static_cast<int>(uniform(1, p_.max_atoms));
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) {
    if (uniform(0, 2) == 0) {
      atoms.push_back(Atom::point(rat()));
      continue;
    }
    Rat a = rat(), b = rat();
    if (b < a) std::swap(a, b);
    atoms.push_back(Atom::closed(a, b));
  }
  return ClosedSubset(RealSubset::canonicalize(atoms));
}

MonotonePWA Gen::monotone(bool strict) {
  const int interior = static_cast<int>(uniform(0, 2));
  std::set<Rat> ts{Rat(0), Rat(1)};
  for (int guard = 0; static_cast<int>(ts.size()) < interior + 2 && guard < 64; ++guard)
    ts.insert(rat());
  std::vector<Rat> values;
  if (strict) {
    std::set<Rat> vs;
    for (int guard = 0; vs.size() < ts.size() && guard < 256; ++guard) vs.insert(rat());
    if (vs.size() < ts.size()) {
      vs.clear();
      for (std::size_t i = 0; i < ts.size(); ++i)
        vs.insert(make_rat(static_cast<long>(i), static_cast<long>(ts.size() - 1)));
    }
    values.assign(vs.begin(), vs.end());
  } else {
    for (std::size_t i = 0; i < ts.size(); ++i) values.push_back(rat());
    std::sort(values.begin(), values.end());
  }
  std::vector<std::pair<Rat, Rat>> pts;
  std::size_t i = 0;
  for (const Rat& t : ts) pts.emplace_back(t, values[i++]);
  return MonotonePWA::from_points(std::move(pts));
}

PiecewiseFn Gen::grade_fn() {
  std::set<Rat> cutset{Rat(0), Rat(1)};
  const int extra = static_cast<int>(uniform(0, 3));
  for (int i = 0; i < extra; ++i) cutset.insert(rat());
  FnDecomposition d;
  d.cuts.assign(cutset.begin(), cutset.end());
  auto affine = [&](const Rat& lo, const Rat& hi) {
    const Rat vlo = rat(), vhi = rat();
    const Rat slope = (vhi - vlo) / (hi - lo);
    return AffineMap{slope, vlo - slope * lo};
  };
  for (std::size_t j = 0; j + 1 < d.cuts.size(); ++j) {
    const AffineMap q = affine(d.cuts[j], d.cuts[j + 1]);
    d.gap_q.push_back(q);
    d.gap_i.push_back(uniform(0, 1) == 1 ? q : affine(d.cuts[j], d.cuts[j + 1]));
  }
  for (std::size_t j = 0; j < d.cuts.size(); ++j) {
    const long mode = uniform(0, 2);
    if (mode == 0 && j > 0)
      d.point_values.push_back(d.gap_q[j - 1].eval(d.cuts[j]));
    else if (mode == 1 && j + 1 < d.cuts.size())
      d.point_values.push_back(d.gap_q[j].eval(d.cuts[j]));
    else
      d.point_values.push_back(rat());
  }
  return PiecewiseFn::assemble(d);
}

Universe Gen::universe() const {
  std::vector<std::string> labels;
  for (int i = 1; i <= p_.universe_size; ++i)
    labels.push_back("x" + std::to_string(i));
  return Universe(std::move(labels));
}

Fs Gen::fs(const Universe& u) {
  std::vector<Rat> grades;
  for (std::size_t i = 0; i < u.size(); ++i) grades.push_back(rat());
  return Fs(u, std::move(grades));
}

Ivfs Gen::ivfs(const Universe& u) {
  std::vector<Interval> grades;
  for (std::size_t i = 0; i < u.size(); ++i) grades.push_back(interval());
  return Ivfs(u, std::move(grades));
}

Svfs Gen::svfs(const Universe& u, bool allow_empty) {
  std::vector<RealSubset> grades;
  for (std::size_t i = 0; i < u.size(); ++i)
    grades.push_back(allow_empty ? subset() : nonempty_subset());
  return Svfs(u, std::move(grades));
}

Cvfs Gen::cvfs(const Universe& u) {
  std::vector<ClosedSubset> grades;
  for (std::size_t i = 0; i < u.size(); ++i) grades.push_back(closed_subset());
  return Cvfs(u, std::move(grades));
}

T2fs Gen::t2fs(const Universe& u) {
  std::vector<PiecewiseFn> grades;
  for (std::size_t i = 0; i < u.size(); ++i) grades.push_back(grade_fn());
  return T2fs(u, std::move(grades));
}

// --- report serialization ----------------------------------------------------

std::string report_text(const Report& r) {
  std::string out = (r.passed() ? "[PASS] " : "[FAIL] ") + r.suite + ": " +
                    std::to_string(r.samples) + " samples, seed " +
                    std::to_string(r.seed);
  if (!r.passed()) out += ", " + std::to_string(r.failures.size()) + " failure(s)";
  out += "\n";
  for (const std::string& n : r.notes) out += "  note: " + n + "\n";
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    out += "  fail: " + r.failures[i].inputs + "\n";
    out += "    expected: " + r.failures[i].expected + "\n";
    out += "    actual:   " + r.failures[i].actual + "\n";
  }
  if (r.failures.size() > shown)
    out += "  (" + std::to_string(r.failures.size() - shown) + " more)\n";
  return out;
}

namespace {

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : r.failures)
    failures.push_back({{"inputs", f.inputs},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  return {{"suite", r.suite},
          {"samples", r.samples},
          {"seed", r.seed},
          {"failures", failures},
          {"verdict", r.passed() ? "pass" : "fail"}};
}

}  // namespace

std::string report_json(const Report& r) { return report_to_json(r).dump(2); }

std::string reports_json(const std::vector<Report>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Report& r : rs) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

// --- generic law checkers ----------------------------------------------------

namespace {

std::string show_closed(const ClosedSubset& c) { return print_set(c.set()); }

template <class G>
std::string show_family(const FuzzySet<G>& f, std::string (*show_grade)(const G&)) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.universe().size(); ++i) {
    if (i) out += ", ";
    out += f.universe().labels()[i] + "=" + show_grade(f.grade(i));
  }
  return out + "}";
}

std::string show_rat_grade(const Rat& r) { return format_rat(r); }
std::string show_set_grade(const RealSubset& s) { return print_set(s); }
std::string show_iv_grade(const Interval& iv) { return print_interval(iv); }
std::string show_closed_grade(const ClosedSubset& c) { return print_set(c.set()); }
std::string show_fn_grade(const PiecewiseFn& f) { return describe(f); }

std::string show_fs(const Fs& f) { return show_family<Rat>(f, show_rat_grade); }
std::string show_ivfs(const Ivfs& f) { return show_family<Interval>(f, show_iv_grade); }
std::string show_svfs(const Svfs& f) { return show_family<RealSubset>(f, show_set_grade); }
std::string show_cvfs(const Cvfs& f) { return show_family<ClosedSubset>(f, show_closed_grade); }
std::string show_t2fs(const T2fs& f) { return show_family<PiecewiseFn>(f, show_fn_grade); }

template <class T>
struct Structure {
  std::function<T(Gen&)> gen;
  std::function<T(const T&, const T&)> join;
  std::function<T(const T&, const T&)> meet;
  std::function<bool(const T&, const T&)> leq;  // null skips the order laws
  std::function<std::string(const T&)> show;
};

template <class T>
Report lattice_report(const std::string& name, const GenParams& p,
                      const Structure<T>& st) {
  Report rep{name, p.samples, p.seed, {}, {}};
  Gen gen(p);
  for (int k = 0; k < p.samples; ++k) {
    const T a = st.gen(gen), b = st.gen(gen), c = st.gen(gen);
    const std::string inputs = "sample " + std::to_string(k) +
                               ": a=" + st.show(a) + " b=" + st.show(b) +
                               " c=" + st.show(c);
    auto expect_eq = [&](const char* law, const T& x, const T& y) {
      if (!(x == y))
        rep.failures.push_back(
            {inputs + " [" + law + "]", st.show(x), st.show(y)});
    };
    expect_eq("join-commutative", st.join(a, b), st.join(b, a));
    expect_eq("meet-commutative", st.meet(a, b), st.meet(b, a));
    expect_eq("join-associative", st.join(st.join(a, b), c), st.join(a, st.join(b, c)));
    expect_eq("meet-associative", st.meet(st.meet(a, b), c), st.meet(a, st.meet(b, c)));
    expect_eq("join-idempotent", st.join(a, a), a);
    expect_eq("meet-idempotent", st.meet(a, a), a);
    expect_eq("absorption-join", st.join(a, st.meet(a, b)), a);
    expect_eq("absorption-meet", st.meet(a, st.join(a, b)), a);
    if (st.leq) {
      const bool leq = st.leq(a, b);
      if (leq != (st.join(a, b) == b))
        rep.failures.push_back({inputs + " [order-vs-join]",
                                leq ? "join(a,b) == b" : "join(a,b) != b",
                                st.show(st.join(a, b))});
      if (leq != (st.meet(a, b) == a))
        rep.failures.push_back({inputs + " [order-vs-meet]",
                                leq ? "meet(a,b) == a" : "meet(a,b) != a",
                                st.show(st.meet(a, b))});
    }
  }
  return rep;
}

template <class A, class B>
struct HomSpec {
  std::function<A(Gen&)> gen;
  std::function<A(const A&, const A&)> src_join;
  std::function<A(const A&, const A&)> src_meet;
  std::function<B(const A&)> map;
  std::function<B(const B&, const B&)> dst_join;
  std::function<B(const B&, const B&)> dst_meet;
  std::function<std::string(const A&)> show_src;
  std::function<std::string(const B&)> show_dst;
};

template <class A, class B>
Report hom_report(const std::string& name, const GenParams& p,
                  const HomSpec<A, B>& h) {
  Report rep{name, p.samples, p.seed, {}, {}};
  Gen gen(p);
  for (int k = 0; k < p.samples; ++k) {
    const A a = h.gen(gen), b = h.gen(gen);
    const std::string inputs = "sample " + std::to_string(k) +
                               ": a=" + h.show_src(a) + " b=" + h.show_src(b);
    const B fa = h.map(a), fb = h.map(b);
    const B join_mapped = h.map(h.src_join(a, b));
    const B join_target = h.dst_join(fa, fb);
    if (!(join_mapped == join_target))
      rep.failures.push_back({inputs + " [preserves-join]",
                              h.show_dst(join_mapped), h.show_dst(join_target)});
    const B meet_mapped = h.map(h.src_meet(a, b));
    const B meet_target = h.dst_meet(fa, fb);
    if (!(meet_mapped == meet_target))
      rep.failures.push_back({inputs + " [preserves-meet]",
                              h.show_dst(meet_mapped), h.show_dst(meet_target)});
    if (!(a == b) && fa == fb)
      rep.failures.push_back({inputs + " [injective]",
                              "distinct images for distinct arguments",
                              h.show_dst(fa)});
  }
  return rep;
}

template <class A, class B>
Report diagram_report(const std::string& name, const GenParams& p,
                      std::function<A(Gen&)> gen,
                      std::vector<std::pair<std::string, std::function<B(const A&)>>> paths,
                      std::function<std::string(const A&)> show_src,
                      std::function<std::string(const B&)> show_dst) {
  Report rep{name, p.samples, p.seed, {}, {}};
  Gen g(p);
  for (int k = 0; k < p.samples; ++k) {
    const A a = gen(g);
    const B first = paths.front().second(a);
    for (std::size_t i = 1; i < paths.size(); ++i) {
      const B other = paths[i].second(a);
      if (!(first == other))
        rep.failures.push_back(
            {"sample " + std::to_string(k) + ": a=" + show_src(a) + " [" +
                 paths.front().first + " vs " + paths[i].first + "]",
             show_dst(first), show_dst(other)});
    }
  }
  return rep;
}

// --- counterexample search ---------------------------------------------------

Rat halve_denominator(const Rat& r) {
  const BigInt q = denominator(r);
  if (q <= 2) return r;
  const BigInt q2 = (q + 1) / 2;
  const Rat doubled = r * q2 * 2 + 1;
  const BigInt rounded = numerator(doubled) / (denominator(doubled) * 2);
  Rat out(rounded, q2);
  if (out < 0) out = 0;
  if (out > 1) out = 1;
  return out;
}

std::optional<Atom> coarsen_atom(const Atom& a) {
  const Rat lo = halve_denominator(a.lo), hi = halve_denominator(a.hi);
  if (lo > hi) return std::nullopt;
  if (lo == hi) {
    if (a.tag == Tag::IOnly) return std::nullopt;
    return Atom::point(lo);
  }
  return Atom::make(lo, hi, a.lo_closed, a.hi_closed, a.tag);
}

using PairPredicate = std::function<bool(const RealSubset&, const RealSubset&)>;

// Greedy shrink: drop atoms, then halve endpoint denominators, for as long as
// the predicate keeps failing.
std::pair<RealSubset, RealSubset> minimize_pair(RealSubset s, RealSubset t,
                                                const PairPredicate& broken) {
  auto still_broken = [&](const RealSubset& x, const RealSubset& y) {
    try {
      return broken(x, y);
    } catch (const Error&) {
      return false;
    }
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (RealSubset* side : {&s, &t}) {
      for (std::size_t i = 0; i < side->atoms().size(); ++i) {
        std::vector<Atom> fewer = side->atoms();
        fewer.erase(fewer.begin() + static_cast<long>(i));
        const RealSubset candidate = RealSubset::canonicalize(fewer);
        const RealSubset& other = side == &s ? t : s;
        if (side == &s ? still_broken(candidate, other)
                       : still_broken(other, candidate)) {
          *side = candidate;
          improved = true;
          break;
        }
      }
    }
    for (RealSubset* side : {&s, &t}) {
      std::vector<Atom> coarser;
      for (const Atom& a : side->atoms())
        if (auto c = coarsen_atom(a)) coarser.push_back(*c);
      const RealSubset candidate = RealSubset::canonicalize(coarser);
      if (candidate == *side) continue;
      const RealSubset& other = side == &s ? t : s;
      if (side == &s ? still_broken(candidate, other)
                     : still_broken(other, candidate)) {
        *side = candidate;
        improved = true;
      }
    }
  }
  return {std::move(s), std::move(t)};
}

std::optional<std::string> search_set_pair(Gen& gen, int budget,
                                           const PairPredicate& broken,
                                           bool nonempty) {
  for (int k = 0; k < budget; ++k) {
    const RealSubset s = nonempty ? gen.nonempty_subset() : gen.subset();
    const RealSubset t = nonempty ? gen.nonempty_subset() : gen.subset();
    bool hit = false;
    try {
      hit = broken(s, t);
    } catch (const Error&) {
      hit = false;
    }
    if (hit) {
      const auto [ms, mt] = minimize_pair(s, t, broken);
      return "S=" + print_set(ms) + " T=" + print_set(mt) +
             " (candidate " + std::to_string(k + 1) + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::string> search_grade_pair(
    Gen& gen, int budget, const std::function<bool(const Rat&, const Rat&)>& broken) {
  for (int k = 0; k < budget; ++k) {
    Rat a = gen.rat(), b = gen.rat();
    if (!broken(a, b)) continue;
    for (bool improved = true; improved;) {
      improved = false;
      for (Rat* v : {&a, &b}) {
        const Rat coarser = halve_denominator(*v);
        if (coarser == *v) continue;
        const Rat saved = *v;
        *v = coarser;
        if (!broken(a, b)) *v = saved;
        else improved = true;
      }
    }
    return "A(x)=" + format_rat(a) + " B(x)=" + format_rat(b) +
           " (candidate " + std::to_string(k + 1) + ")";
  }
  return std::nullopt;
}

bool hesitant_absorption_broken(const RealSubset& s, const RealSubset& t) {
  return !(hesitant_union(t, hesitant_inter(t, s)) == t) ||
         !(hesitant_inter(t, hesitant_union(t, s)) == t);
}

bool s_inter_empty_broken(const RealSubset& s, const RealSubset& t) {
  return s_inter(s, t).is_empty();
}

bool singleton_meet_broken(const Rat& a, const Rat& b) {
  const RealSubset lhs = set_intersect(RealSubset::of(Atom::point(a)),
                                       RealSubset::of(Atom::point(b)));
  const RealSubset rhs = RealSubset::of(Atom::point(rat_min(a, b)));
  return !(lhs == rhs);
}

bool point_indicator_meet_broken(const Rat& a, const Rat& b) {
  return !(pw_min(point_indicator(a), point_indicator(b)) ==
           point_indicator(rat_min(a, b)));
}

std::optional<std::string> search_closed_meet_empty(Gen& gen, int budget) {
  for (int k = 0; k < budget; ++k) {
    const ClosedSubset s = gen.closed_subset(), t = gen.closed_subset();
    const RealSubset met = s_inter(s.set(), t.set());
    if (met.is_empty() || !is_closed(met))
      return "S=" + print_set(s.set()) + " T=" + print_set(t.set()) +
             " meet=" + print_set(met) + " (candidate " + std::to_string(k + 1) + ")";
  }
  return std::nullopt;
}

// --- pinned auxiliary maps ----------------------------------------------------

const MonotonePWA& fixed_warp() {
  static const MonotonePWA f = MonotonePWA::from_points(
      {{Rat(0), Rat(0)}, {make_rat(1, 2), make_rat(1, 4)}, {Rat(1), Rat(1)}});
  return f;
}

const MonotonePWA& fixed_pair_lower() {
  static const MonotonePWA h = MonotonePWA::from_points(
      {{Rat(0), Rat(0)}, {make_rat(1, 2), make_rat(1, 4)}, {Rat(1), make_rat(3, 4)}});
  return h;
}

const MonotonePWA& fixed_pair_upper() {
  static const MonotonePWA h = MonotonePWA::from_points(
      {{Rat(0), make_rat(1, 4)}, {make_rat(1, 2), make_rat(3, 4)}, {Rat(1), Rat(1)}});
  return h;
}

// Grade of the corollary chain computed straight from its formula: the value
// t on [0,t] and 0 above it.
PiecewiseFn direct_point_profile(const Rat& t) {
  FnDecomposition d;
  if (t == 0 || t == 1) {
    d.cuts = {Rat(0), Rat(1)};
    d.point_values = {t, t == 1 ? Rat(1) : Rat(0)};
    d.gap_q = {AffineMap::constant(t == 1 ? Rat(1) : Rat(0))};
    d.gap_i = d.gap_q;
    if (t == 0) {
      d.point_values = {Rat(0), Rat(0)};
    }
    return PiecewiseFn::assemble(d);
  }
  d.cuts = {Rat(0), t, Rat(1)};
  d.point_values = {t, t, Rat(0)};
  d.gap_q = {AffineMap::constant(t), AffineMap::constant(Rat(0))};
  d.gap_i = d.gap_q;
  return PiecewiseFn::assemble(d);
}

// --- suite registry -----------------------------------------------------------

Report witness_report(const std::string& name, const GenParams& p,
                      bool expect_found,
                      const std::function<std::optional<std::string>(Gen&, int)>& search) {
  Report rep{name, p.samples, p.seed, {}, {}};
  Gen gen(p);
  const auto w = search(gen, p.samples);
  if (expect_found) {
    if (w)
      rep.notes.push_back("witness: " + *w);
    else
      rep.failures.push_back({"budget " + std::to_string(p.samples),
                              "a witness exists", "none found"});
  } else {
    if (w)
      rep.failures.push_back({"budget " + std::to_string(p.samples),
                              "no witness must exist", *w});
    else
      rep.notes.push_back("no witness among " + std::to_string(p.samples) +
                          " candidates");
  }
  return rep;
}

Report hesitant_lattice_report(const GenParams& p) {
  Report rep{"hesitant-lattice", p.samples, p.seed, {}, {}};
  Gen gen(p);
  bool absorption_broken_seen = false;
  std::string first_witness;
  for (int k = 0; k < p.samples; ++k) {
    const RealSubset s = gen.nonempty_subset(), t = gen.nonempty_subset();
    const std::string inputs =
        "sample " + std::to_string(k) + ": S=" + print_set(s) + " T=" + print_set(t);
    if (!(hesitant_union(s, t) == s_union(s, t)))
      rep.failures.push_back({inputs + " [union-agrees-with-s-union]",
                              print_set(s_union(s, t)),
                              print_set(hesitant_union(s, t))});
    if (!(hesitant_union(s, s) == s) || !(hesitant_inter(s, s) == s))
      rep.failures.push_back({inputs + " [idempotent]", print_set(s),
                              print_set(hesitant_inter(s, s))});
    if (!absorption_broken_seen && hesitant_absorption_broken(s, t)) {
      absorption_broken_seen = true;
      const auto [ms, mt] = minimize_pair(s, t, hesitant_absorption_broken);
      first_witness = "S=" + print_set(ms) + " T=" + print_set(mt);
    }
  }
  if (absorption_broken_seen)
    rep.notes.push_back("absorption fails, witness: " + first_witness);
  else
    rep.failures.push_back({"budget " + std::to_string(p.samples),
                            "an absorption violation exists (not a lattice)",
                            "none found"});
  return rep;
}

Report svfs_lattice_report(const GenParams& p) {
  Structure<Svfs> st{
      [](Gen& g) { return g.svfs(g.universe(), true); },
      svfs_join,
      [](const Svfs& a, const Svfs& b) { return svfs_meet(a, b, true); },
      svfs_subset_leq,
      show_svfs,
  };
  Report rep = lattice_report("svfs-lattice", p, st);
  // the constant-empty family is the bottom of the empty-allowed lattice
  Gen gen(p);
  const Universe u = gen.universe();
  const Svfs bottom(u, std::vector<RealSubset>(u.size()));
  for (int k = 0; k < p.samples; ++k) {
    const Svfs a = gen.svfs(u, true);
    if (!svfs_subset_leq(bottom, a))
      rep.failures.push_back({"sample " + std::to_string(k) + " [bottom]",
                              "empty-valued family below " + show_svfs(a),
                              "not below"});
  }
  return rep;
}

Report cuts_report(const GenParams& p) {
  Report rep{"cuts", p.samples, p.seed, {}, {}};
  GenParams p8 = p;
  p8.universe_size = 8;
  Gen gen(p8);
  const Universe u = gen.universe();
  for (int k = 0; k < p.samples; ++k) {
    const Fs a = gen.fs(u), b = gen.fs(u);
    const std::string inputs =
        "sample " + std::to_string(k) + ": A=" + show_fs(a) + " B=" + show_fs(b);
    if (!(cut_reconstruct(cut_family(a)) == a))
      rep.failures.push_back({inputs + " [cut-roundtrip]", show_fs(a),
                              show_fs(cut_reconstruct(cut_family(a)))});
    const Fs joined = fs_join(a, b), met = fs_meet(a, b);
    std::set<Rat> levels;
    for (const Fs* f : {&a, &b, &joined, &met})
      for (const Rat& t : cut_family(*f).thresholds) levels.insert(t);
    for (const Rat& t : levels) {
      const auto ca = cut(a, t), cb = cut(b, t);
      std::set<std::size_t> expect_join(ca.begin(), ca.end());
      expect_join.insert(cb.begin(), cb.end());
      const auto got_join = cut(joined, t);
      if (std::set<std::size_t>(got_join.begin(), got_join.end()) != expect_join)
        rep.failures.push_back({inputs + " [cut-of-join at t=" + format_rat(t) + "]",
                                "union of cuts", "differs"});
      std::set<std::size_t> expect_meet;
      for (const std::size_t i : ca)
        if (std::find(cb.begin(), cb.end(), i) != cb.end()) expect_meet.insert(i);
      const auto got_meet = cut(met, t);
      if (std::set<std::size_t>(got_meet.begin(), got_meet.end()) != expect_meet)
        rep.failures.push_back({inputs + " [cut-of-meet at t=" + format_rat(t) + "]",
                                "intersection of cuts", "differs"});
    }
  }
  return rep;
}

Report restriction_report(const GenParams& p) {
  Report rep{"restriction", p.samples, p.seed, {}, {}};
  Gen gen(p);
  for (int k = 0; k < p.samples; ++k) {
    const Interval i = gen.interval(), j = gen.interval();
    const std::string inputs = "sample " + std::to_string(k) + ": I=" +
                               print_interval(i) + " J=" + print_interval(j);
    const ClosedSubset ci = ClosedSubset::of_interval(i);
    const ClosedSubset cj = ClosedSubset::of_interval(j);
    if (!(closed_join(ci, cj).set() == interval_join(i, j).as_subset()))
      rep.failures.push_back({inputs + " [join-restricts]",
                              print_interval(interval_join(i, j)),
                              print_set(closed_join(ci, cj).set())});
    if (!(closed_meet(ci, cj).set() == interval_meet(i, j).as_subset()))
      rep.failures.push_back({inputs + " [meet-restricts]",
                              print_interval(interval_meet(i, j)),
                              print_set(closed_meet(ci, cj).set())});
    if (closed_leq(ci, cj) != interval_leq(i, j))
      rep.failures.push_back({inputs + " [order-restricts]",
                              interval_leq(i, j) ? "leq" : "not leq",
                              closed_leq(ci, cj) ? "leq" : "not leq"});
  }
  return rep;
}

Report s_union_bound_status_report(const GenParams& p) {
  Report rep{"s-union-bound-status", p.samples, p.seed, {}, {}};
  Gen gen(p);
  int upper_held = 0, upper_total = 0, least_held = 0, least_total = 0;
  for (int k = 0; k < p.samples; ++k) {
    const RealSubset s = gen.nonempty_subset(), t = gen.nonempty_subset();
    const RealSubset u = s_union(s, t);
    ++upper_total;
    if (!u.is_empty() && s_order(s, u) && s_order(t, u)) ++upper_held;
    const RealSubset cand = gen.nonempty_subset();
    if (!u.is_empty() && s_order(s, cand) && s_order(t, cand)) {
      ++least_total;
      if (s_order(u, cand)) ++least_held;
    }
  }
  rep.notes.push_back("join is an upper bound for " + std::to_string(upper_held) +
                      "/" + std::to_string(upper_total) + " sampled non-closed pairs");
  rep.notes.push_back("join was minimal for " + std::to_string(least_held) + "/" +
                      std::to_string(least_total) + " sampled upper bounds");
  return rep;
}

std::vector<SuiteInfo> build_registry() {
  std::vector<SuiteInfo> suites;
  auto add = [&](std::string name, std::string summary, int samples,
                 std::function<Report(const GenParams&)> run) {
    suites.push_back({std::move(name), std::move(summary), samples, std::move(run)});
  };

  // lattice laws
  add("interval-lattice", "lattice laws for closed intervals", 1000,
      [](const GenParams& p) {
        return lattice_report<Interval>(
            "interval-lattice", p,
            {[](Gen& g) { return g.interval(); }, interval_join, interval_meet,
             interval_leq, print_interval});
      });
  add("closed-lattice", "lattice laws for nonempty closed sets", 1000,
      [](const GenParams& p) {
        return lattice_report<ClosedSubset>(
            "closed-lattice", p,
            {[](Gen& g) { return g.closed_subset(); }, closed_join, closed_meet,
             closed_leq, show_closed});
      });
  add("powerset-lattice", "boolean lattice of representable subsets", 1000,
      [](const GenParams& p) {
        return lattice_report<RealSubset>(
            "powerset-lattice", p,
            {[](Gen& g) { return g.subset(); }, set_union, set_intersect,
             subset_of, print_set});
      });
  add("piecewise-lattice", "lattice laws for grade functions", 500,
      [](const GenParams& p) {
        return lattice_report<PiecewiseFn>(
            "piecewise-lattice", p,
            {[](Gen& g) { return g.grade_fn(); }, pw_max, pw_min, pw_leq, describe});
      });
  add("fs-lattice", "pointwise lattice of plain fuzzy sets", 500,
      [](const GenParams& p) {
        return lattice_report<Fs>(
            "fs-lattice", p,
            {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
             fs_leq, show_fs});
      });
  add("ivfs-lattice", "pointwise lattice of interval-valued fuzzy sets", 500,
      [](const GenParams& p) {
        return lattice_report<Ivfs>(
            "ivfs-lattice", p,
            {[](Gen& g) { return g.ivfs(g.universe()); }, ivfs_join, ivfs_meet,
             ivfs_leq, show_ivfs});
      });
  add("svfs-lattice", "empty-allowed set-valued lattice with its bottom", 500,
      svfs_lattice_report);
  add("cvfs-lattice", "pointwise lattice of closed-valued fuzzy sets", 500,
      [](const GenParams& p) {
        return lattice_report<Cvfs>(
            "cvfs-lattice", p,
            {[](Gen& g) { return g.cvfs(g.universe()); }, cvfs_join, cvfs_meet,
             cvfs_leq, show_cvfs});
      });
  add("t2fs-lattice", "pointwise lattice of type-2 fuzzy sets", 300,
      [](const GenParams& p) {
        return lattice_report<T2fs>(
            "t2fs-lattice", p,
            {[](Gen& g) { return g.t2fs(g.universe()); }, t2fs_join, t2fs_meet,
             t2fs_leq, show_t2fs});
      });
  add("hesitant-lattice", "hesitant operators are not a lattice (witnessed)",
      1000, hesitant_lattice_report);

  // homomorphisms
  add("hom-diagonal", "t -> [t,t] embeds plain sets in interval-valued ones", 500,
      [](const GenParams& p) {
        return hom_report<Fs, Ivfs>(
            "hom-diagonal", p,
            {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
             as_diagonal_intervals, ivfs_join, ivfs_meet, show_fs, show_ivfs});
      });
  add("hom-upper", "t -> [t,1] embedding", 500, [](const GenParams& p) {
    return hom_report<Fs, Ivfs>(
        "hom-upper", p,
        {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
         as_upper_intervals, ivfs_join, ivfs_meet, show_fs, show_ivfs});
  });
  add("hom-lower", "t -> [0,t] embedding", 500, [](const GenParams& p) {
    return hom_report<Fs, Ivfs>(
        "hom-lower", p,
        {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
         as_lower_intervals, ivfs_join, ivfs_meet, show_fs, show_ivfs});
  });
  add("hom-pair", "generic (h1,h2) interval embedding, pinned pair", 500,
      [](const GenParams& p) {
        return hom_report<Fs, Ivfs>(
            "hom-pair", p,
            {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
             [](const Fs& a) {
               return as_pair_intervals(a, fixed_pair_lower(), fixed_pair_upper());
             },
             ivfs_join, ivfs_meet, show_fs, show_ivfs});
      });
  add("hom-downset", "t -> [0,t] embeds plain sets in set-valued ones", 500,
      [](const GenParams& p) {
        return hom_report<Fs, Svfs>(
            "hom-downset", p,
            {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
             as_downsets, svfs_join,
             [](const Svfs& a, const Svfs& b) { return svfs_meet(a, b, true); },
             show_fs, show_svfs});
      });
  add("hom-split", "interval -> rational/irrational split, grade level", 500,
      [](const GenParams& p) {
        return hom_report<Interval, RealSubset>(
            "hom-split", p,
            {[](Gen& g) { return g.interval(); }, interval_join, interval_meet,
             xi, set_union, set_intersect, print_interval, print_set});
      });
  add("hom-split-lifted", "pointwise split embeds IVFS in SVFS", 500,
      [](const GenParams& p) {
        return hom_report<Ivfs, Svfs>(
            "hom-split-lifted", p,
            {[](Gen& g) { return g.ivfs(g.universe()); }, ivfs_join, ivfs_meet,
             split_intervals, svfs_join,
             [](const Svfs& a, const Svfs& b) { return svfs_meet(a, b, true); },
             show_ivfs, show_svfs});
      });
  add("hom-widen", "intervals as closed sets embed IVFS in CVFS", 500,
      [](const GenParams& p) {
        return hom_report<Ivfs, Cvfs>(
            "hom-widen", p,
            {[](Gen& g) { return g.ivfs(g.universe()); }, ivfs_join, ivfs_meet,
             intervals_as_closed, cvfs_join, cvfs_meet, show_ivfs, show_cvfs});
      });
  add("hom-profile-grade", "closed set -> grade function, grade level", 500,
      [](const GenParams& p) {
        return hom_report<ClosedSubset, PiecewiseFn>(
            "hom-profile-grade", p,
            {[](Gen& g) { return g.closed_subset(); }, closed_join, closed_meet,
             closed_profile, pw_max, pw_min, show_closed, describe});
      });
  add("hom-profile", "pointwise profile embeds CVFS in T2FS", 500,
      [](const GenParams& p) {
        return hom_report<Cvfs, T2fs>(
            "hom-profile", p,
            {[](Gen& g) { return g.cvfs(g.universe()); }, cvfs_join, cvfs_meet,
             closed_as_profiles, t2fs_join, t2fs_meet, show_cvfs, show_t2fs});
      });
  add("hom-warped-profile", "profile with a pinned warp map", 500,
      [](const GenParams& p) {
        return hom_report<Cvfs, T2fs>(
            "hom-warped-profile", p,
            {[](Gen& g) { return g.cvfs(g.universe()); }, cvfs_join, cvfs_meet,
             [](const Cvfs& a) { return closed_as_warped_profiles(a, fixed_warp()); },
             t2fs_join, t2fs_meet, show_cvfs, show_t2fs});
      });
  add("hom-constant", "t -> constant grade embeds FS in T2FS", 500,
      [](const GenParams& p) {
        return hom_report<Fs, T2fs>(
            "hom-constant", p,
            {[](Gen& g) { return g.fs(g.universe()); }, fs_join, fs_meet,
             as_constant_grades, t2fs_join, t2fs_meet, show_fs, show_t2fs});
      });
  add("hom-indicator", "sets as indicator grades embed SVFS in T2FS", 500,
      [](const GenParams& p) {
        return hom_report<Svfs, T2fs>(
            "hom-indicator", p,
            {[](Gen& g) { return g.svfs(g.universe(), true); }, svfs_join,
             [](const Svfs& a, const Svfs& b) { return svfs_meet(a, b, true); },
             sets_as_indicators, t2fs_join, t2fs_meet, show_svfs, show_t2fs});
      });

  // negative results
  add("neg-singleton-meet", "singleton view of FS in SVFS breaks meets", 10000,
      [](const GenParams& p) {
        return witness_report("neg-singleton-meet", p, true,
                              [](Gen& g, int budget) {
                                return search_grade_pair(g, budget,
                                                         singleton_meet_broken);
                              });
      });
  add("neg-point-indicator-meet", "singleton view of FS in T2FS breaks meets",
      10000, [](const GenParams& p) {
        return witness_report("neg-point-indicator-meet", p, true,
                              [](Gen& g, int budget) {
                                return search_grade_pair(
                                    g, budget, point_indicator_meet_broken);
                              });
      });
  add("neg-hesitant-absorption", "hesitant operators violate absorption", 10000,
      [](const GenParams& p) {
        return witness_report("neg-hesitant-absorption", p, true,
                              [](Gen& g, int budget) {
                                return search_set_pair(
                                    g, budget, hesitant_absorption_broken, true);
                              });
      });
  add("neg-s-inter-empty", "branching meet can vanish on non-closed inputs",
      10000, [](const GenParams& p) {
        return witness_report("neg-s-inter-empty", p, true,
                              [](Gen& g, int budget) {
                                return search_set_pair(g, budget,
                                                       s_inter_empty_broken, true);
                              });
      });
  add("neg-closed-meet-empty", "branching meet never vanishes on closed inputs",
      10000, [](const GenParams& p) {
        return witness_report("neg-closed-meet-empty", p, false,
                              search_closed_meet_empty);
      });

  // diagrams
  add("diagram-split-diagonal", "split of the diagonal equals the downset map",
      500, [](const GenParams& p) {
        return diagram_report<Fs, Svfs>(
            "diagram-split-diagonal", p,
            [](Gen& g) { return g.fs(g.universe()); },
            {{"split(diagonal)", [](const Fs& a) {
                return split_intervals(as_diagonal_intervals(a));
              }},
             {"downsets", as_downsets}},
            show_fs, show_svfs);
      });
  add("diagram-below-indicator",
      "downset indicators agree along all three routes", 500,
      [](const GenParams& p) {
        return diagram_report<Fs, T2fs>(
            "diagram-below-indicator", p,
            [](Gen& g) { return g.fs(g.universe()); },
            {{"indicator(downsets)", [](const Fs& a) {
                return sets_as_indicators(as_downsets(a));
              }},
             {"below-indicators", as_below_indicators},
             {"indicator(widen(lower))", [](const Fs& a) {
                return sets_as_indicators(intervals_as_sets(as_lower_intervals(a)));
              }}},
            show_fs, show_t2fs);
      });
  add("diagram-point-indicator",
      "indicator of singletons equals the point-indicator view", 500,
      [](const GenParams& p) {
        return diagram_report<Fs, T2fs>(
            "diagram-point-indicator", p,
            [](Gen& g) { return g.fs(g.universe()); },
            {{"indicator(singletons)", [](const Fs& a) {
                return sets_as_indicators(as_singleton_sets(a));
              }},
             {"point-indicators", as_point_indicators}},
            show_fs, show_t2fs);
      });
  add("diagram-profile-chain",
      "profile of widened diagonal agrees with the direct formula", 500,
      [](const GenParams& p) {
        return diagram_report<Fs, T2fs>(
            "diagram-profile-chain", p,
            [](Gen& g) { return g.fs(g.universe()); },
            {{"profile(widen(diagonal))", [](const Fs& a) {
                return closed_as_profiles(intervals_as_closed(as_diagonal_intervals(a)));
              }},
             {"direct", [](const Fs& a) {
                return lift<Rat, PiecewiseFn>(a, direct_point_profile);
              }}},
            show_fs, show_t2fs);
      });

  // oracle, cuts, restriction, open-question status
  add("oracle-grid", "symbolic S-operators match brute-force enumeration", 1000,
      [](const GenParams& p) { return compare_with_oracle(p, 64); });
  add("cuts", "level cuts determine the fuzzy set and respect the lattice", 200,
      cuts_report);
  add("restriction", "closed operators restrict to the interval operators", 500,
      restriction_report);
  add("s-union-bound-status",
      "empirical bound status of the branching join off closed sets", 500,
      s_union_bound_status_report);

  return suites;
}

}  // namespace

const std::vector<SuiteInfo>& all_suites() {
  static const std::vector<SuiteInfo> suites = build_registry();
  return suites;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const SuiteInfo& s : all_suites()) names.push_back(s.name);
  return names;
}

std::vector<std::string> diagram_names() {
  std::vector<std::string> names;
  for (const SuiteInfo& s : all_suites())
    if (s.name.starts_with("diagram-")) names.push_back(s.name.substr(8));
  return names;
}

Report run_suite(const std::string& name, GenParams params) {
  for (const SuiteInfo& s : all_suites()) {
    if (s.name != name) continue;
    if (params.samples <= 0) params.samples = s.default_samples;
    return s.run(params);
  }
  fail(Errc::UnknownName, "unknown suite: " + name);
}

std::vector<Report> run_all_suites(const GenParams& params) {
  std::vector<Report> reports;
  for (const SuiteInfo& s : all_suites()) {
    GenParams p = params;
    if (p.samples <= 0) p.samples = s.default_samples;
    reports.push_back(s.run(p));
  }
  return reports;
}

std::optional<std::string> find_counterexample(const std::string& property,
                                               int budget, std::uint64_t seed) {
  GenParams p;
  p.seed = seed;
  Gen gen(p);
  if (property == "hesitant-absorption")
    return search_set_pair(gen, budget, hesitant_absorption_broken, true);
  if (property == "s-inter-empty")
    return search_set_pair(gen, budget, s_inter_empty_broken, true);
  if (property == "singleton-meet")
    return search_grade_pair(gen, budget, singleton_meet_broken);
  if (property == "point-indicator-meet")
    return search_grade_pair(gen, budget, point_indicator_meet_broken);
  if (property == "closed-meet-empty")
    return search_closed_meet_empty(gen, budget);
  fail(Errc::UnknownName, "unknown property: " + property);
}

// --- grid oracle ---------------------------------------------------------------

GridSet grid_from_subset(const RealSubset& s, int denom) {
  GridSet g{denom, {}};
  for (const Atom& a : s.atoms()) {
    if (!a.is_point())
      fail(Errc::NotOnGrid, "set has a non-degenerate atom: " + print_set(s));
    const Rat scaled = a.lo * denom;
    if (denominator(scaled) != 1)
      fail(Errc::NotOnGrid,
           format_rat(a.lo) + " is not a multiple of 1/" + std::to_string(denom));
    g.elems.push_back(static_cast<int>(numerator(scaled)));
  }
  return g;
}

RealSubset grid_to_subset(const GridSet& g) {
  std::vector<Atom> atoms;
  for (const int e : g.elems) atoms.push_back(Atom::point(make_rat(e, g.denom)));
  return RealSubset::canonicalize(atoms);
}

namespace {

bool grid_member(const GridSet& s, int e) {
  return std::binary_search(s.elems.begin(), s.elems.end(), e);
}

void grid_require_nonempty(const GridSet& s) {
  if (s.elems.empty()) fail(Errc::EmptySet, "grid operand must be nonempty");
}

GridSet grid_sorted(GridSet g) {
  std::sort(g.elems.begin(), g.elems.end());
  g.elems.erase(std::unique(g.elems.begin(), g.elems.end()), g.elems.end());
  return g;
}

}  // namespace

bool grid_s_order(const GridSet& s, const GridSet& t) {
  grid_require_nonempty(s);
  grid_require_nonempty(t);
  if (s.elems.back() > t.elems.back()) return false;
  if (s.elems.front() > t.elems.front()) return false;
  for (const int e : s.elems)
    if (e >= t.elems.front() && e <= s.elems.back() && !grid_member(t, e))
      return false;
  return true;
}

GridSet grid_s_union(const GridSet& s, const GridSet& t) {
  grid_require_nonempty(s);
  grid_require_nonempty(t);
  const GridSet& lo = s.elems.front() <= t.elems.front() ? s : t;
  const GridSet& hi = s.elems.front() <= t.elems.front() ? t : s;
  GridSet out{s.denom, hi.elems};
  for (const int e : lo.elems)
    if (e >= hi.elems.front() && e <= lo.elems.back()) out.elems.push_back(e);
  return grid_sorted(std::move(out));
}

GridSet grid_s_inter(const GridSet& s, const GridSet& t) {
  grid_require_nonempty(s);
  grid_require_nonempty(t);
  const GridSet& lo = s.elems.front() <= t.elems.front() ? s : t;
  const GridSet& hi = s.elems.front() <= t.elems.front() ? t : s;
  GridSet out{s.denom, {}};
  for (const int e : lo.elems)
    if ((e >= lo.elems.front() && e <= hi.elems.front()) || grid_member(hi, e))
      out.elems.push_back(e);
  return grid_sorted(std::move(out));
}

Report compare_with_oracle(const GenParams& params, int grid_denom) {
  Report rep{"oracle-grid", params.samples, params.seed, {}, {}};
  Gen gen(params);
  auto random_grid = [&] {
    GridSet g{grid_denom, {}};
    const long n = gen.uniform(1, 8);
    for (long i = 0; i < n; ++i)
      g.elems.push_back(static_cast<int>(gen.uniform(0, grid_denom)));
    return grid_sorted(std::move(g));
  };
  auto show_grid = [&](const GridSet& g) { return print_set(grid_to_subset(g)); };
  for (int k = 0; k < params.samples; ++k) {
    const GridSet s = random_grid(), t = random_grid();
    const RealSubset ss = grid_to_subset(s), ts = grid_to_subset(t);
    const std::string inputs = "sample " + std::to_string(k) + ": S=" +
                               show_grid(s) + " T=" + show_grid(t);
    const GridSet sym_union = grid_from_subset(s_union(ss, ts), grid_denom);
    const GridSet ora_union = grid_s_union(s, t);
    if (!(sym_union == ora_union))
      rep.failures.push_back({inputs + " [s-union]",
                              show_grid(ora_union), show_grid(sym_union)});
    const GridSet sym_inter = grid_from_subset(s_inter(ss, ts), grid_denom);
    const GridSet ora_inter = grid_s_inter(s, t);
    if (!(sym_inter == ora_inter))
      rep.failures.push_back({inputs + " [s-inter]",
                              show_grid(ora_inter), show_grid(sym_inter)});
    if (s_order(ss, ts) != grid_s_order(s, t))
      rep.failures.push_back({inputs + " [s-order]",
                              grid_s_order(s, t) ? "leq" : "not leq",
                              s_order(ss, ts) ? "leq" : "not leq"});
    if (s_order(ts, ss) != grid_s_order(t, s))
      rep.failures.push_back({inputs + " [s-order-reversed]",
                              grid_s_order(t, s) ? "leq" : "not leq",
                              s_order(ts, ss) ? "leq" : "not leq"});
  }
  return rep;
}

}  // namespace fuzzlat
