#include "fuzzlat/set_expr.hpp"

#include "fuzzlat/errors.hpp"

#include "doctest.h"

#include <random>

using namespace fuzzlat;

namespace {

Rat r(long n, long d = 1) { return make_rat(n, d); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rat("3/10") == r(3, 10));
  CHECK(parse_rat("0.3") == r(3, 10));
  CHECK(parse_rat("0.25") == r(1, 4));
  CHECK(parse_rat("1") == r(1));
  CHECK(parse_rat("0") == r(0));
  CHECK(parse_rat(" 7/8 ") == r(7, 8));
  CHECK(code_of([] { parse_rat("1.5"); }) == Errc::Range);
  CHECK(code_of([] { parse_rat("2/1"); }) == Errc::Range);
  CHECK(code_of([] { parse_rat("1/0"); }) == Errc::Syntax);
  CHECK(code_of([] { parse_rat("x"); }) == Errc::Syntax);
}

TEST_CASE("set expressions evaluate to canonical sets") {
  CHECK(parse_set_expr("[3/10,7/10]") == RealSubset::closed_span(r(3, 10), r(7, 10)));
  CHECK(parse_set_expr("{0.4,0.5,0.6}") ==
        RealSubset::canonicalize({Atom::point(r(2, 5)), Atom::point(r(1, 2)),
                                  Atom::point(r(3, 5))}));
  CHECK(parse_set_expr("(0.2,0.4]") ==
        RealSubset::of(Atom::make(r(1, 5), r(2, 5), false, true)));
  CHECK(parse_set_expr("QQ") ==
        RealSubset::of(Atom::closed(r(0), r(1), Tag::QOnly)));
  CHECK(parse_set_expr("[0,1/2] & II") ==
        RealSubset::of(Atom::closed(r(0), r(1, 2), Tag::IOnly)));
  CHECK(parse_set_expr("([0,1/5]&QQ)|([0,1/2]&II)") ==
        xi(Interval::make(r(1, 5), r(1, 2))));
  CHECK(parse_set_expr("!([0.2,0.5])") ==
        set_complement(RealSubset::closed_span(r(1, 5), r(1, 2))));
  CHECK(parse_set_expr("QQ & II").is_empty());
  // precedence: & binds tighter than |
  CHECK(parse_set_expr("{0.1} | [0.2,0.3] & QQ") ==
        set_union(parse_set_expr("{0.1}"), parse_set_expr("[0.2,0.3]&QQ")));
  // grouped expressions starting with a digit-free factor
  CHECK(parse_set_expr("(QQ | II)") == RealSubset::unit());
}

TEST_CASE("parser reports typed errors with positions") {
  CHECK(code_of([] { parse_set_expr("[0.4,0.2]"); }) == Errc::EmptyAtom);
  CHECK(code_of([] { parse_set_expr("{}"); }) == Errc::EmptyAtom);
  CHECK(code_of([] { parse_set_expr("(0.3,0.3]"); }) == Errc::EmptyAtom);
  CHECK(code_of([] { parse_set_expr("[0.2,0.5"); }) == Errc::Syntax);
  CHECK(code_of([] { parse_set_expr("[0.2,1.5]"); }) == Errc::Range);
  CHECK(code_of([] { parse_set_expr("[0.2,0.5] !"); }) == Errc::Syntax);
  CHECK(code_of([] { parse_set_expr(""); }) == Errc::Syntax);

  try {
    parse_set_expr("[0.2 0.5]");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("printing round-trips through the parser") {
  CHECK(print_set(parse_set_expr("[3/10,2/5] | {1/2} | {3/5}")) ==
        "[3/10,2/5] | {1/2} | {3/5}");
  CHECK(print_set(RealSubset{}) == "∅");

  std::mt19937_64 rng(131);
  for (int it = 0; it < 300; ++it) {
    std::vector<Atom> atoms;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      const long d = 1 + static_cast<long>(rng() % 16);
      long a = static_cast<long>(rng() % (d + 1));
      long b = static_cast<long>(rng() % (d + 1));
      if (b < a) std::swap(a, b);
      const Tag tag = static_cast<Tag>(rng() % 3);
      if (a == b) {
        if (tag == Tag::IOnly) continue;
        atoms.push_back(Atom::point(make_rat(a, d)));
      } else {
        atoms.push_back(Atom::make(make_rat(a, d), make_rat(b, d),
                                   rng() % 2 == 0, rng() % 2 == 0, tag));
      }
    }
    if (atoms.empty()) continue;
    const RealSubset s = RealSubset::canonicalize(atoms);
    if (s.is_empty()) continue;
    CHECK(parse_set_expr(print_set(s)) == s);
  }
}

TEST_CASE("interval parsing accepts only closed intervals") {
  CHECK(parse_interval("[0.2,0.5]") == Interval::make(r(1, 5), r(1, 2)));
  CHECK(parse_interval("{0.3}") == Interval::make(r(3, 10), r(3, 10)));
  CHECK_THROWS_AS(parse_interval("(0.2,0.5]"), Error);
  CHECK_THROWS_AS(parse_interval("[0.2,0.5]&QQ"), Error);
  CHECK_THROWS_AS(parse_interval("[0.1,0.2]|[0.4,0.5]"), Error);
}

TEST_CASE("grade expressions build the expected functions") {
  CHECK(parse_grade_expr("id") == PiecewiseFn::identity());
  CHECK(parse_grade_expr("const(0.5)") == constant_grade(r(1, 2)));
  CHECK(parse_grade_expr("point(1/2)") == point_indicator(r(1, 2)));
  CHECK(parse_grade_expr("below(0.5)") == below_indicator(r(1, 2)));
  CHECK(parse_grade_expr("chi([0.2,0.5])") ==
        indicator(RealSubset::closed_span(r(1, 5), r(1, 2))));
  CHECK(parse_grade_expr("max(id, const(0.5))") ==
        pw_max(PiecewiseFn::identity(), constant_grade(r(1, 2))));
  CHECK(parse_grade_expr("min(id , const(1/2))") ==
        pw_min(PiecewiseFn::identity(), constant_grade(r(1, 2))));
  CHECK(parse_grade_expr("profile([0.3,0.4]|{0.6})") ==
        set_profile(parse_set_expr("[0.3,0.4]|{0.6}")));
  CHECK(parse_grade_expr("warp({0.5}; pwa(0:0, 1/2:1/4, 1:1))") ==
        warped_profile(ClosedSubset::point(r(1, 2)),
                       parse_monotone("pwa(0:0,1/2:1/4,1:1)")));
  CHECK(parse_grade_expr("pwa(0:0, 1:1)") == PiecewiseFn::identity());
  CHECK(parse_grade_expr("pwa(0:1/4, 1:1/4)") == constant_grade(r(1, 4)));

  CHECK_THROWS_AS(parse_grade_expr("spline(0.3)"), Error);
  CHECK_THROWS_AS(parse_grade_expr("max(id)"), Error);
  CHECK_THROWS_AS(parse_grade_expr("profile(QQ&II)"), Error);
}
