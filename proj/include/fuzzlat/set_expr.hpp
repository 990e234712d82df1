#pragma once

#include "fuzzlat/grade_lattices.hpp"
#include "fuzzlat/piecewise.hpp"
#include "fuzzlat/set_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fuzzlat {

// Abstract syntax of set expressions:
//   expr     := term ("|" term)*
//   term     := factor ("&" factor)*
//   factor   := "!" factor | "(" expr ")" | interval | points | "QQ" | "II"
//   interval := ("["|"(") rat "," rat ("]"|")")
//   points   := "{" rat ("," rat)* "}"
//   rat      := decimal | int "/" int
// Decimal literals are exact rationals (0.3 = 3/10), never binary floats.
struct SetExpr {
  enum class Kind {
    IntervalLit,
    PointsLit,
    Rationals,    // QQ
    Irrationals,  // II
    Union,
    Intersect,
    Complement,
  };

  Kind kind = Kind::Rationals;
  Rat lo, hi;
  bool lo_closed = false, hi_closed = false;  // IntervalLit
  std::vector<Rat> points;                    // PointsLit
  std::vector<SetExpr> children;              // 2 for Union/Intersect, 1 for Complement
};

SetExpr parse_set_expr_ast(std::string_view text);
RealSubset eval_set_expr(const SetExpr& e);
RealSubset parse_set_expr(std::string_view text);

// Requires the whole expression to denote a closed interval.
Interval parse_interval(std::string_view text);

// Exact rational literal (decimal or p/q).
Rat parse_rat(std::string_view text);

// Canonical printing in the grammar's own syntax; parse(print(s)) == s for
// nonempty sets. The empty set prints as a bare empty-set sign, which is not
// itself parseable input.
std::string print_set(const RealSubset& s);
std::string print_interval(const Interval& iv);
std::string print_bounds(const Bounds& b);

// Grade-function expressions (type-2 grades):
//   gexpr := "max(" gexpr "," gexpr ")" | "min(" gexpr "," gexpr ")"
//          | "const(" rat ")" | "point(" rat ")" | "below(" rat ")"
//          | "chi(" expr ")" | "profile(" expr ")"
//          | "warp(" expr ";" pwa ")" | pwa | "id"
//   pwa   := "pwa(" rat ":" rat ("," rat ":" rat)* ")"
PiecewiseFn parse_grade_expr(std::string_view text);

// Monotone map literal, the pwa(...) form alone.
MonotonePWA parse_monotone(std::string_view text);

}  // namespace fuzzlat
