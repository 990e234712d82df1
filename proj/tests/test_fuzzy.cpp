#include "fuzzlat/fuzzy.hpp"

#include "fuzzlat/errors.hpp"

#include "doctest.h"

#include <random>

using namespace fuzzlat;

namespace {

Rat r(long n, long d = 1) { return make_rat(n, d); }

Universe uni(std::initializer_list<std::string> labels) {
  return Universe(std::vector<std::string>(labels));
}

Fs fs_of(const Universe& u, std::initializer_list<long> tenths) {
  std::vector<Rat> grades;
  for (long t : tenths) grades.push_back(r(t, 10));
  return Fs(u, std::move(grades));
}

RealSubset pts(std::initializer_list<Rat> vals) {
  std::vector<Atom> atoms;
  for (const Rat& v : vals) atoms.push_back(Atom::point(v));
  return RealSubset::canonicalize(atoms);
}

Fs random_fs(std::mt19937_64& rng, const Universe& u, long denom = 16) {
  std::vector<Rat> grades;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const long d = 1 + static_cast<long>(rng() % denom);
    grades.push_back(make_rat(static_cast<long>(rng() % (d + 1)), d));
  }
  return Fs(u, std::move(grades));
}

}  // namespace

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(Universe({}), Error);
  CHECK_THROWS_AS(Universe({"x", "x"}), Error);
  const Universe u = uni({"x1", "x2"});
  CHECK(u.index_of("x2") == 1);
  CHECK_THROWS_AS(u.index_of("y"), Error);
}

TEST_CASE("pointwise combine on plain fuzzy sets") {
  const Universe u = uni({"x"});
  CHECK(fs_meet(Fs(u, {r(3, 10)}), Fs(u, {r(1, 2)})) == Fs(u, {r(3, 10)}));
  CHECK(fs_join(Fs(u, {r(3, 10)}), Fs(u, {r(1, 2)})) == Fs(u, {r(1, 2)}));

  const Universe v = uni({"y"});
  CHECK_THROWS_AS(fs_meet(Fs(u, {r(1, 2)}), Fs(v, {r(1, 2)})), Error);
}

TEST_CASE("strict set-valued meet reports empty grades") {
  const Universe u = uni({"x"});
  const Svfs a(u, {pts({r(3, 10)})});
  const Svfs b(u, {pts({r(1, 2)})});
  CHECK_THROWS_AS(svfs_meet(a, b, false), Error);
  CHECK(svfs_meet(a, b, true).grade(0).is_empty());
  CHECK(svfs_join(a, b).grade(0) == pts({r(3, 10), r(1, 2)}));
}

TEST_CASE("closed-valued meet reproduces the worked grades pointwise") {
  const Universe u = uni({"x"});
  const Cvfs a(u, {ClosedSubset(RealSubset::closed_span(r(3, 10), r(7, 10)))});
  const Cvfs b(u, {ClosedSubset(pts({r(2, 5), r(1, 2), r(3, 5)}))});
  const Cvfs met = cvfs_meet(a, b);
  CHECK(met.grade(0).set() ==
        set_union(RealSubset::closed_span(r(3, 10), r(2, 5)),
                  pts({r(1, 2), r(3, 5)})));
}

TEST_CASE("pointwise orders") {
  const Universe u = uni({"x", "y"});
  CHECK(fs_leq(fs_of(u, {3, 2}), fs_of(u, {4, 2})));
  CHECK_FALSE(fs_leq(fs_of(u, {4, 2}), fs_of(u, {3, 2})));

  const Ivfs a(u, {Interval::make(r(1, 5), r(7, 10)), Interval::make(r(0), r(1))});
  const Ivfs b(u, {Interval::make(r(3, 10), r(3, 5)), Interval::make(r(0), r(1))});
  CHECK_FALSE(ivfs_leq(a, b));
  CHECK_FALSE(ivfs_leq(b, a));

  // order consistency against the lattice operators
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const Fs f = random_fs(rng, u), g = random_fs(rng, u);
    CHECK(fs_leq(f, g) == (fs_join(f, g) == g));
    const Ivfs fi = as_diagonal_intervals(f), gi = as_upper_intervals(g);
    CHECK(ivfs_leq(fi, gi) == (ivfs_join(fi, gi) == gi));
  }
}

TEST_CASE("lifted grade maps hit the expected grades") {
  const Universe u = uni({"x"});
  const Fs a(u, {r(2, 5)});
  CHECK(as_downsets(a).grade(0) == RealSubset::closed_span(r(0), r(2, 5)));
  CHECK(as_singleton_sets(a).grade(0) == pts({r(2, 5)}));
  CHECK(as_constant_grades(a).grade(0) == constant_grade(r(2, 5)));
  CHECK(as_diagonal_intervals(a).grade(0) == Interval::make(r(2, 5), r(2, 5)));
  CHECK(as_upper_intervals(a).grade(0) == Interval::make(r(2, 5), r(1)));
  CHECK(as_lower_intervals(a).grade(0) == Interval::make(r(0), r(2, 5)));
}

TEST_CASE("singleton view is the diagonal followed by interval widening") {
  const Universe u = uni({"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const Fs a = random_fs(rng, u);
    CHECK(intervals_as_sets(as_diagonal_intervals(a)) == as_singleton_sets(a));
  }
}

TEST_CASE("cut worked examples") {
  const Universe u = uni({"x1", "x2"});
  const Fs a(u, {r(3, 10), r(7, 10)});
  CHECK(cut(a, r(1, 2)) == std::vector<std::size_t>{1});
  CHECK(cut(a, r(0)) == std::vector<std::size_t>{0, 1});

  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Fs f = random_fs(rng, u);
    const Rat t = make_rat(static_cast<long>(rng() % 17), 16);
    const Rat s = make_rat(static_cast<long>(rng() % 17), 16);
    if (t <= s) {
      const auto cs = cut(f, s), ct = cut(f, t);
      for (const std::size_t i : cs)
        CHECK(std::find(ct.begin(), ct.end(), i) != ct.end());
    }
  }
}

TEST_CASE("cut families round-trip and respect the lattice") {
  const Universe u = uni({"x1", "x2"});
  const Fs a(u, {r(3, 10), r(7, 10)});
  const CutFamily cf = cut_family(a);
  REQUIRE(cf.thresholds.size() == 2);
  CHECK(cf.thresholds[0] == r(3, 10));
  CHECK(cf.sets[0] == std::vector<std::size_t>{0, 1});
  CHECK(cf.thresholds[1] == r(7, 10));
  CHECK(cf.sets[1] == std::vector<std::size_t>{1});
  CHECK(cut_reconstruct(cf) == a);

  const Fs zero(u, {r(0), r(0)});
  CHECK(cut_family(zero).thresholds.empty());
  CHECK(cut_reconstruct(cut_family(zero)) == zero);

  const Universe u8 = uni({"a", "b", "c", "d", "e", "f", "g", "h"});
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const Fs f = random_fs(rng, u8);
    const Fs g = random_fs(rng, u8);
    CHECK(cut_reconstruct(cut_family(f)) == f);
    // cut-level identity: (f join g)_t = f_t union g_t at every threshold
    const Fs joined = fs_join(f, g);
    std::set<Rat> levels;
    for (const Rat& t : cut_family(f).thresholds) levels.insert(t);
    for (const Rat& t : cut_family(g).thresholds) levels.insert(t);
    for (const Rat& t : cut_family(joined).thresholds) levels.insert(t);
    for (const Rat& t : levels) {
      std::set<std::size_t> want;
      for (const std::size_t i : cut(f, t)) want.insert(i);
      for (const std::size_t i : cut(g, t)) want.insert(i);
      const auto got = cut(joined, t);
      CHECK(std::set<std::size_t>(got.begin(), got.end()) == want);
      // and dually for the meet
      std::set<std::size_t> want_meet;
      const auto gt = cut(g, t);
      for (const std::size_t i : cut(f, t))
        if (std::find(gt.begin(), gt.end(), i) != gt.end()) want_meet.insert(i);
      const auto got_meet = cut(fs_meet(f, g), t);
      CHECK(std::set<std::size_t>(got_meet.begin(), got_meet.end()) == want_meet);
    }
  }
}

TEST_CASE("cut_reconstruct validates nesting") {
  const Universe u = uni({"x1", "x2"});
  CutFamily bad{u, {r(3, 10), r(7, 10)}, {{1}, {0}}};
  CHECK_THROWS_AS(cut_reconstruct(bad), Error);
  CutFamily bad2{u, {r(0)}, {{0}}};
  CHECK_THROWS_AS(cut_reconstruct(bad2), Error);
}
