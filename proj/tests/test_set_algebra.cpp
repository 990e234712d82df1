#include "fuzzlat/set_algebra.hpp"

#include "fuzzlat/errors.hpp"

#include "doctest.h"

#include <random>
#include <set>
#include <vector>

using namespace fuzzlat;

namespace {

Rat r(long n, long d = 1) { return make_rat(n, d); }

RealSubset canon(std::vector<Atom> atoms) {
  return RealSubset::canonicalize(atoms);
}

// ---------------------------------------------------------------------------
// Independent oracle: membership decided by a direct scan of the *raw* atom
// lists, no canonicalization involved. Q-membership is checked at rational
// probe points; I-content is checked per open gap between consecutive
// endpoints (an atom either covers such a gap or misses it entirely).
// ---------------------------------------------------------------------------

bool naive_q_member(const std::vector<Atom>& atoms, const Rat& p) {
  for (const Atom& a : atoms) {
    if (a.tag == Tag::IOnly) continue;
    const bool above = p > a.lo || (p == a.lo && a.lo_closed);
    const bool below = p < a.hi || (p == a.hi && a.hi_closed);
    if (above && below) return true;
  }
  return false;
}

bool naive_i_covers(const std::vector<Atom>& atoms, const Rat& lo,
                    const Rat& hi) {
  for (const Atom& a : atoms) {
    if (a.tag == Tag::QOnly) continue;
    if (a.lo <= lo && hi <= a.hi && a.lo < a.hi) return true;
  }
  return false;
}

std::vector<Rat> probe_cuts(const std::vector<Atom>& xs,
                            const std::vector<Atom>& ys) {
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (const auto* v : {&xs, &ys})
    for (const Atom& a : *v) {
      cuts.push_back(a.lo);
      cuts.push_back(a.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

enum class BoolOp { Union, Intersect, Complement };

// Checks `result` against the oracle combination of raw inputs piece by piece.
void check_against_oracle(const std::vector<Atom>& a,
                          const std::vector<Atom>& b, BoolOp op,
                          const RealSubset& result) {
  const std::vector<Rat> cuts = probe_cuts(a, b);
  auto combine = [&](bool x, bool y) {
    switch (op) {
      case BoolOp::Union: return x || y;
      case BoolOp::Intersect: return x && y;
      case BoolOp::Complement: return !x;
    }
    return false;
  };
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const bool want = combine(naive_q_member(a, cuts[j]), naive_q_member(b, cuts[j]));
    CAPTURE(j);
    CHECK(contains(result, cuts[j]) == want);
    if (j + 1 < cuts.size()) {
      // probe the gap's rational content at its midpoint
      const Rat mid = (cuts[j] + cuts[j + 1]) / 2;
      const bool want_q =
          combine(naive_q_member(a, mid), naive_q_member(b, mid));
      CHECK(contains(result, mid) == want_q);
      const bool want_i = combine(naive_i_covers(a, cuts[j], cuts[j + 1]),
                                  naive_i_covers(b, cuts[j], cuts[j + 1]));
      CHECK(naive_i_covers(result.atoms(), cuts[j], cuts[j + 1]) == want_i);
    }
  }
}

struct AtomGen {
  std::mt19937_64 rng;
  explicit AtomGen(std::uint64_t seed) : rng(seed) {}

  long pick(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  }

  Rat rat(long denom_bound = 16) {
    const long d = pick(1, denom_bound);
    return make_rat(pick(0, d), d);
  }

  Atom atom() {
    for (;;) {
      Rat a = rat(), b = rat();
      if (b < a) std::swap(a, b);
      const Tag tag = static_cast<Tag>(pick(0, 2));
      if (a == b) {
        if (tag == Tag::IOnly) continue;
        return Atom::point(a);
      }
      return Atom::make(a, b, pick(0, 1) == 1, pick(0, 1) == 1, tag);
    }
  }

  std::vector<Atom> atoms(int max_count) {
    std::vector<Atom> out;
    const int n = static_cast<int>(pick(0, max_count));
    for (int i = 0; i < n; ++i) out.push_back(atom());
    return out;
  }
};

}  // namespace

TEST_CASE("atom construction rejects empty or out-of-range atoms") {
  CHECK_THROWS_AS(Atom::make(r(2, 5), r(1, 5), true, true), Error);
  CHECK_THROWS_AS(Atom::make(r(1, 2), r(1, 2), true, false), Error);
  CHECK_THROWS_AS(Atom::make(r(1, 2), r(1, 2), true, true, Tag::IOnly), Error);
  CHECK_THROWS_AS(Atom::make(r(-1, 2), r(1, 2), true, true), Error);
  CHECK_THROWS_AS(Atom::make(r(1, 2), r(3, 2), true, true), Error);
  // rational point atoms normalize their tag
  CHECK(Atom::make(r(1, 2), r(1, 2), true, true, Tag::QOnly).tag == Tag::All);
}

TEST_CASE("canonicalize merges rational and irrational parts of one span") {
  const RealSubset got = canon({Atom::closed(r(0), r(1, 5), Tag::QOnly),
                                Atom::closed(r(0), r(1, 5), Tag::IOnly)});
  CHECK(got == canon({Atom::closed(r(0), r(1, 5))}));
  CHECK(got.atoms().size() == 1);
  CHECK(got.atoms()[0].tag == Tag::All);
}

TEST_CASE("canonicalize merges overlapping and adjacent spans") {
  CHECK(canon({Atom::closed(r(1, 10), r(3, 10)), Atom::closed(r(1, 5), r(1, 2))}) ==
        canon({Atom::closed(r(1, 10), r(1, 2))}));
  CHECK(canon({Atom::point(r(1, 2)),
               Atom::make(r(1, 2), r(7, 10), false, true)}) ==
        canon({Atom::closed(r(1, 2), r(7, 10))}));
}

TEST_CASE("canonicalize is idempotent") {
  AtomGen gen(7);
  for (int it = 0; it < 300; ++it) {
    const RealSubset s = canon(gen.atoms(5));
    CHECK(canon(s.atoms()) == s);
  }
}

TEST_CASE("canonical form is invariant under refinement of the atom list") {
  AtomGen gen(11);
  for (int it = 0; it < 300; ++it) {
    std::vector<Atom> raw = gen.atoms(4);
    const RealSubset s = canon(raw);
    // split every non-point atom at an interior rational
    std::vector<Atom> split;
    for (const Atom& a : raw) {
      if (a.is_point()) {
        split.push_back(a);
        continue;
      }
      const Rat mid = (a.lo + a.hi) / 2;
      split.push_back(Atom::make(a.lo, mid, a.lo_closed, false, a.tag));
      split.push_back(Atom::make(mid, a.hi, true, a.hi_closed,
                                 a.tag == Tag::IOnly ? Tag::All : a.tag));
      // re-add the midpoint split faithfully for IOnly atoms: their interior
      // rational is not a member, so the right half must stay IOnly
      if (a.tag == Tag::IOnly) {
        split.pop_back();
        split.push_back(Atom::make(mid, a.hi, false, a.hi_closed, Tag::IOnly));
      }
    }
    CHECK(canon(split) == s);
  }
}

TEST_CASE("union matches the worked examples") {
  CHECK(set_union(canon({Atom::closed(r(1, 10), r(3, 10))}),
                  canon({Atom::closed(r(1, 5), r(1, 2))})) ==
        canon({Atom::closed(r(1, 10), r(1, 2))}));

  // tagged spans merge only where both parts are present
  const RealSubset got =
      set_union(canon({Atom::closed(r(0), r(1, 5), Tag::QOnly)}),
                canon({Atom::closed(r(0), r(1, 2), Tag::IOnly)}));
  CHECK(got == canon({Atom::closed(r(0), r(1, 5)),
                      Atom::make(r(1, 5), r(1, 2), false, true, Tag::IOnly)}));
  REQUIRE(got.atoms().size() == 2);
  CHECK(got.atoms()[0] == Atom::closed(r(0), r(1, 5)));
  CHECK(got.atoms()[1].tag == Tag::IOnly);

  const RealSubset a = canon({Atom::closed(r(1, 4), r(3, 4), Tag::QOnly)});
  CHECK(set_union(a, RealSubset{}) == a);
}

TEST_CASE("intersect matches the worked examples") {
  CHECK(set_intersect(
            canon({Atom::closed(r(1, 10), r(2, 5))}),
            canon({Atom::make(r(1, 5), r(3, 5), false, false)})) ==
        canon({Atom::make(r(1, 5), r(2, 5), false, true)}));

  CHECK(set_intersect(canon({Atom::closed(r(0), r(1, 2), Tag::QOnly)}),
                      canon({Atom::closed(r(0), r(1, 2), Tag::IOnly)}))
            .is_empty());
}

TEST_CASE("complement matches the worked examples") {
  CHECK(set_complement(canon({Atom::closed(r(1, 5), r(1, 2))})) ==
        canon({Atom::make(r(0), r(1, 5), true, false),
               Atom::make(r(1, 2), r(1), false, true)}));
  CHECK(set_complement(canon({Atom::closed(r(0), r(1), Tag::QOnly)})) ==
        canon({Atom::closed(r(0), r(1), Tag::IOnly)}));
  CHECK(set_complement(RealSubset{}) == RealSubset::unit());
}

TEST_CASE("boolean operations agree with the elementary-piece oracle") {
  AtomGen gen(23);
  for (int it = 0; it < 400; ++it) {
    const std::vector<Atom> a = gen.atoms(4);
    const std::vector<Atom> b = gen.atoms(4);
    const RealSubset ca = canon(a), cb = canon(b);
    check_against_oracle(a, b, BoolOp::Union, set_union(ca, cb));
    check_against_oracle(a, b, BoolOp::Intersect, set_intersect(ca, cb));
    check_against_oracle(a, {}, BoolOp::Complement, set_complement(ca));
  }
}

TEST_CASE("ops agree with naive enumeration on finite rational point sets") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 200; ++it) {
    std::set<Rat> xs, ys;
    const int nx = rng() % 5, ny = rng() % 5;
    for (int i = 0; i < nx; ++i) xs.insert(make_rat(rng() % 17, 16));
    for (int i = 0; i < ny; ++i) ys.insert(make_rat(rng() % 17, 16));
    auto lift = [](const std::set<Rat>& s) {
      std::vector<Atom> atoms;
      for (const Rat& v : s) atoms.push_back(Atom::point(v));
      return canon(atoms);
    };
    const RealSubset a = lift(xs), b = lift(ys);

    std::set<Rat> u = xs, n;
    u.insert(ys.begin(), ys.end());
    for (const Rat& v : xs)
      if (ys.count(v)) n.insert(v);
    CHECK(set_union(a, b) == lift(u));
    CHECK(set_intersect(a, b) == lift(n));

    bool sub = true;
    for (const Rat& v : xs) sub = sub && ys.count(v) > 0;
    CHECK(subset_of(a, b) == sub);
    if (!xs.empty()) {
      const Bounds bb = bounds(a);
      CHECK(bb.inf == *xs.begin());
      CHECK(bb.sup == *xs.rbegin());
      CHECK(bb.inf_attained);
      CHECK(bb.sup_attained);
    }
  }
}

TEST_CASE("boolean algebra laws hold exactly on random sets") {
  AtomGen gen(37);
  for (int it = 0; it < 250; ++it) {
    const RealSubset a = canon(gen.atoms(4));
    const RealSubset b = canon(gen.atoms(4));
    const RealSubset c = canon(gen.atoms(4));
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(set_intersect(a, b) == set_intersect(b, a));
    CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
    CHECK(set_intersect(set_intersect(a, b), c) ==
          set_intersect(a, set_intersect(b, c)));
    CHECK(set_union(a, a) == a);
    CHECK(set_intersect(a, a) == a);
    CHECK(set_union(a, set_intersect(a, b)) == a);
    CHECK(set_intersect(a, set_union(a, b)) == a);
    CHECK(set_intersect(a, set_union(b, c)) ==
          set_union(set_intersect(a, b), set_intersect(a, c)));
    CHECK(set_complement(set_union(a, b)) ==
          set_intersect(set_complement(a), set_complement(b)));
    CHECK(set_complement(set_complement(a)) == a);
  }
}

TEST_CASE("subset_of is a partial order") {
  AtomGen gen(41);
  std::vector<RealSubset> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(canon(gen.atoms(3)));
  for (const auto& a : pool) CHECK(subset_of(a, a));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (subset_of(a, b) && subset_of(b, a)) CHECK(a == b);
      for (const auto& c : pool)
        if (subset_of(a, b) && subset_of(b, c)) CHECK(subset_of(a, c));
    }
}

TEST_CASE("subset agreement across Q/I restrictions of intervals") {
  // subsetting is equivalent for an interval, its rational part and its
  // irrational part whenever the interval is non-degenerate
  std::mt19937_64 rng(53);
  for (int it = 0; it < 300; ++it) {
    const long d = 1 + rng() % 16;
    long a0 = rng() % (d + 1), a1 = rng() % (d + 1);
    if (a1 < a0) std::swap(a0, a1);
    if (a0 == a1) continue;
    const long e = 1 + rng() % 16;
    long b0 = rng() % (e + 1), b1 = rng() % (e + 1);
    if (b1 < b0) std::swap(b0, b1);
    const RealSubset i_all = canon({Atom::closed(make_rat(a0, d), make_rat(a1, d))});
    const RealSubset j_all = RealSubset::closed_span(make_rat(b0, e), make_rat(b1, e));
    const RealSubset i_q = canon({Atom::closed(make_rat(a0, d), make_rat(a1, d), Tag::QOnly)});
    const RealSubset j_q = set_intersect(j_all, canon({Atom::closed(r(0), r(1), Tag::QOnly)}));
    const RealSubset i_i = canon({Atom::closed(make_rat(a0, d), make_rat(a1, d), Tag::IOnly)});
    const RealSubset j_i = set_intersect(j_all, canon({Atom::closed(r(0), r(1), Tag::IOnly)}));
    const bool plain = subset_of(i_all, j_all);
    CHECK(subset_of(i_q, j_q) == plain);
    CHECK(subset_of(i_i, j_i) == plain);
  }
}

TEST_CASE("subset_of worked examples") {
  CHECK(subset_of(canon({Atom::closed(r(1, 5), r(1, 2), Tag::QOnly)}),
                  canon({Atom::closed(r(1, 10), r(3, 5), Tag::QOnly)})));
  CHECK(subset_of(canon({Atom::point(r(3, 10))}),
                  canon({Atom::closed(r(3, 10), r(3, 10))})));
  CHECK_FALSE(subset_of(canon({Atom::closed(r(0), r(1, 2), Tag::IOnly)}),
                        canon({Atom::closed(r(0), r(2, 5))})));
}

TEST_CASE("bounds worked examples") {
  const Bounds b1 = bounds(canon({Atom::make(r(1, 5), r(2, 5), false, true, Tag::QOnly)}));
  CHECK(b1.inf == r(1, 5));
  CHECK_FALSE(b1.inf_attained);
  CHECK(b1.sup == r(2, 5));
  CHECK(b1.sup_attained);

  const Bounds b2 = bounds(canon(
      {Atom::point(r(2, 5)), Atom::point(r(1, 2)), Atom::point(r(3, 5))}));
  CHECK(b2.inf == r(2, 5));
  CHECK(b2.sup == r(3, 5));
  CHECK(b2.inf_attained);
  CHECK(b2.sup_attained);

  const Bounds b3 = bounds(canon({Atom::closed(r(3, 10), r(7, 10))}));
  CHECK(b3.inf == r(3, 10));
  CHECK(b3.sup == r(7, 10));
  CHECK(b3.inf_attained);
  CHECK(b3.sup_attained);

  CHECK_THROWS_AS(bounds(RealSubset{}), Error);
}

TEST_CASE("closure worked examples and laws") {
  CHECK(set_closure(canon({Atom::make(r(1, 5), r(2, 5), false, false, Tag::QOnly)})) ==
        canon({Atom::closed(r(1, 5), r(2, 5))}));
  const RealSubset closed = canon({Atom::closed(r(3, 10), r(7, 10))});
  CHECK(set_closure(closed) == closed);
  CHECK(is_closed(closed));

  // closure of ([0,0.2] cap Q) with ([0,0.5] cap I) is all of [0,0.5]
  const RealSubset xi_like =
      canon({Atom::closed(r(0), r(1, 5), Tag::QOnly),
             Atom::closed(r(0), r(1, 2), Tag::IOnly)});
  CHECK(set_closure(xi_like) == canon({Atom::closed(r(0), r(1, 2))}));

  AtomGen gen(61);
  for (int it = 0; it < 200; ++it) {
    const RealSubset a = canon(gen.atoms(4));
    const RealSubset b = canon(gen.atoms(4));
    CHECK(subset_of(a, set_closure(a)));
    CHECK(set_closure(set_closure(a)) == set_closure(a));
    if (subset_of(a, b)) CHECK(subset_of(set_closure(a), set_closure(b)));
  }
}

TEST_CASE("contains worked examples") {
  CHECK(contains(canon({Atom::closed(r(1, 10), r(2, 5), Tag::QOnly)}), r(3, 10)));
  CHECK_FALSE(contains(canon({Atom::closed(r(1, 10), r(2, 5), Tag::IOnly)}), r(3, 10)));
  CHECK_FALSE(contains(canon({Atom::make(r(1, 2), r(1), false, true)}), r(1, 2)));
}
