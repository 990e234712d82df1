#include "fuzzlat/set_expr.hpp"

#include "fuzzlat/errors.hpp"

#include <cctype>

namespace fuzzlat {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!try_eat(c)) error(std::string("expected '") + c + "'");
  }

  bool try_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t after = pos_ + w.size();
    if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after])))
      return false;
    pos_ = after;
    return true;
  }

  [[noreturn]] void error(const std::string& msg) {
    fail(Errc::Syntax, msg + " at position " + std::to_string(pos_));
  }

  BigInt digits() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      error("expected a digit");
    BigInt v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  // decimal | int "/" int, validated to lie in [0,1]
  Rat rat() {
    const BigInt whole = digits();
    Rat value(whole);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const BigInt den = digits();
      if (den == 0) error("zero denominator");
      value = Rat(whole, den);
    } else if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      BigInt frac = 0, scale = 1;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        error("expected digits after decimal point");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        frac = frac * 10 + (text_[pos_] - '0');
        scale *= 10;
        ++pos_;
      }
      value += Rat(frac, scale);
    }
    if (!in_unit(value))
      fail(Errc::Range, "literal outside [0,1]: " + format_rat(value));
    return value;
  }

  Cursor(const Cursor&) = default;
  Cursor& operator=(const Cursor&) = default;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

SetExpr parse_expr(Cursor& cur);

SetExpr interval_tail(Cursor& cur, bool lo_closed) {
  SetExpr node;
  node.kind = SetExpr::Kind::IntervalLit;
  node.lo_closed = lo_closed;
  node.lo = cur.rat();
  cur.expect(',');
  node.hi = cur.rat();
  if (cur.try_eat(']'))
    node.hi_closed = true;
  else if (cur.try_eat(')'))
    node.hi_closed = false;
  else
    cur.error("expected ']' or ')'");
  if (node.lo > node.hi ||
      (node.lo == node.hi && !(node.lo_closed && node.hi_closed)))
    fail(Errc::EmptyAtom, "interval literal denotes the empty set");
  return node;
}

SetExpr parse_points(Cursor& cur) {
  SetExpr node;
  node.kind = SetExpr::Kind::PointsLit;
  if (cur.try_eat('}')) fail(Errc::EmptyAtom, "empty point-set literal {}");
  node.points.push_back(cur.rat());
  while (cur.try_eat(',')) node.points.push_back(cur.rat());
  cur.expect('}');
  return node;
}

SetExpr parse_factor(Cursor& cur) {
  if (cur.try_eat('!')) {
    SetExpr node;
    node.kind = SetExpr::Kind::Complement;
    node.children = {parse_factor(cur)};
    return node;
  }
  if (cur.try_eat('(')) {
    // grouped expression or open-left interval literal; a rational followed
    // by ',' settles it
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Cursor probe = cur;
      probe.rat();
      if (probe.peek() == ',') return interval_tail(cur, false);
    }
    SetExpr inner = parse_expr(cur);
    cur.expect(')');
    return inner;
  }
  if (cur.try_word("QQ")) {
    SetExpr node;
    node.kind = SetExpr::Kind::Rationals;
    return node;
  }
  if (cur.try_word("II")) {
    SetExpr node;
    node.kind = SetExpr::Kind::Irrationals;
    return node;
  }
  if (cur.try_eat('[')) return interval_tail(cur, true);
  if (cur.try_eat('{')) return parse_points(cur);
  cur.error("expected a set factor");
}

SetExpr parse_term(Cursor& cur) {
  SetExpr left = parse_factor(cur);
  while (cur.try_eat('&')) {
    SetExpr node;
    node.kind = SetExpr::Kind::Intersect;
    node.children = {std::move(left), parse_factor(cur)};
    left = std::move(node);
  }
  return left;
}

SetExpr parse_expr(Cursor& cur) {
  SetExpr left = parse_term(cur);
  while (cur.try_eat('|')) {
    SetExpr node;
    node.kind = SetExpr::Kind::Union;
    node.children = {std::move(left), parse_term(cur)};
    left = std::move(node);
  }
  return left;
}

RealSubset rationals() {
  return RealSubset::of(Atom::closed(Rat(0), Rat(1), Tag::QOnly));
}

RealSubset irrationals() {
  return RealSubset::of(Atom::closed(Rat(0), Rat(1), Tag::IOnly));
}

MonotonePWA parse_pwa_tail(Cursor& cur) {
  cur.expect('(');
  std::vector<std::pair<Rat, Rat>> pts;
  do {
    Rat t = cur.rat();
    cur.expect(':');
    Rat v = cur.rat();
    pts.emplace_back(std::move(t), std::move(v));
  } while (cur.try_eat(','));
  cur.expect(')');
  return MonotonePWA::from_points(std::move(pts));
}

PiecewiseFn parse_gexpr(Cursor& cur) {
  auto rat_arg = [&cur] {
    cur.expect('(');
    Rat v = cur.rat();
    cur.expect(')');
    return v;
  };
  auto set_arg = [&cur] {
    cur.expect('(');
    RealSubset s = eval_set_expr(parse_expr(cur));
    cur.expect(')');
    return s;
  };
  const bool want_max = cur.try_word("max");
  if (want_max || cur.try_word("min")) {
    cur.expect('(');
    PiecewiseFn left = parse_gexpr(cur);
    cur.expect(',');
    PiecewiseFn right = parse_gexpr(cur);
    cur.expect(')');
    return want_max ? pw_max(left, right) : pw_min(left, right);
  }
  if (cur.try_word("const")) return constant_grade(rat_arg());
  if (cur.try_word("point")) return point_indicator(rat_arg());
  if (cur.try_word("below")) return below_indicator(rat_arg());
  if (cur.try_word("chi")) return indicator(set_arg());
  if (cur.try_word("profile")) {
    RealSubset s = set_arg();
    if (s.is_empty()) fail(Errc::EmptySet, "profile of the empty set");
    return set_profile(s);
  }
  if (cur.try_word("warp")) {
    cur.expect('(');
    RealSubset s = eval_set_expr(parse_expr(cur));
    cur.expect(';');
    if (!cur.try_word("pwa")) cur.error("expected pwa(...)");
    MonotonePWA warp = parse_pwa_tail(cur);
    cur.expect(')');
    return warped_profile(ClosedSubset(std::move(s)), warp);
  }
  if (cur.try_word("pwa")) {
    const MonotonePWA m = parse_pwa_tail(cur);
    FnDecomposition d;
    for (const auto& [t, v] : m.points()) {
      d.cuts.push_back(t);
      d.point_values.push_back(v);
    }
    for (std::size_t j = 0; j + 1 < d.cuts.size(); ++j) {
      const auto [slope, offset] = m.segment_map(d.cuts[j], d.cuts[j + 1]);
      d.gap_q.push_back(AffineMap{slope, offset});
      d.gap_i.push_back(AffineMap{slope, offset});
    }
    return PiecewiseFn::assemble(d);
  }
  if (cur.try_word("id")) return PiecewiseFn::identity();
  cur.error("expected a grade expression");
}

}  // namespace

SetExpr parse_set_expr_ast(std::string_view text) {
  Cursor cur(text);
  SetExpr e = parse_expr(cur);
  if (!cur.at_end()) cur.error("trailing input");
  return e;
}

RealSubset eval_set_expr(const SetExpr& e) {
  switch (e.kind) {
    case SetExpr::Kind::IntervalLit:
      return RealSubset::of(Atom::make(e.lo, e.hi, e.lo_closed, e.hi_closed));
    case SetExpr::Kind::PointsLit: {
      std::vector<Atom> atoms;
      for (const Rat& p : e.points) atoms.push_back(Atom::point(p));
      return RealSubset::canonicalize(atoms);
    }
    case SetExpr::Kind::Rationals: return rationals();
    case SetExpr::Kind::Irrationals: return irrationals();
    case SetExpr::Kind::Union:
      return set_union(eval_set_expr(e.children[0]), eval_set_expr(e.children[1]));
    case SetExpr::Kind::Intersect:
      return set_intersect(eval_set_expr(e.children[0]), eval_set_expr(e.children[1]));
    case SetExpr::Kind::Complement:
      return set_complement(eval_set_expr(e.children[0]));
  }
  fail(Errc::Internal, "unreachable expression kind");
}

RealSubset parse_set_expr(std::string_view text) {
  return eval_set_expr(parse_set_expr_ast(text));
}

Interval parse_interval(std::string_view text) {
  const RealSubset s = parse_set_expr(text);
  if (s.atoms().size() == 1) {
    const Atom& a = s.atoms().front();
    if (a.tag == Tag::All && a.lo_closed && a.hi_closed)
      return Interval::make(a.lo, a.hi);
  }
  fail(Errc::Range, "expression is not a closed interval: " + std::string(text));
}

Rat parse_rat(std::string_view text) {
  Cursor cur(text);
  const Rat v = cur.rat();
  if (!cur.at_end()) cur.error("trailing input");
  return v;
}

std::string print_set(const RealSubset& s) {
  if (s.is_empty()) return "∅";
  std::string out;
  for (const Atom& a : s.atoms()) {
    if (!out.empty()) out += " | ";
    if (a.is_point()) {
      out += "{" + format_rat(a.lo) + "}";
      continue;
    }
    out += a.lo_closed ? "[" : "(";
    out += format_rat(a.lo) + "," + format_rat(a.hi);
    out += a.hi_closed ? "]" : ")";
    if (a.tag == Tag::QOnly) out += "&QQ";
    if (a.tag == Tag::IOnly) out += "&II";
  }
  return out;
}

std::string print_interval(const Interval& iv) {
  return "[" + format_rat(iv.lo) + "," + format_rat(iv.hi) + "]";
}

std::string print_bounds(const Bounds& b) {
  std::string out = "inf=" + format_rat(b.inf);
  out += b.inf_attained ? " (attained)" : " (not attained)";
  out += " sup=" + format_rat(b.sup);
  out += b.sup_attained ? " (attained)" : " (not attained)";
  return out;
}

PiecewiseFn parse_grade_expr(std::string_view text) {
  Cursor cur(text);
  PiecewiseFn f = parse_gexpr(cur);
  if (!cur.at_end()) cur.error("trailing input");
  return f;
}

MonotonePWA parse_monotone(std::string_view text) {
  Cursor cur(text);
  if (!cur.try_word("pwa")) cur.error("expected pwa(...)");
  MonotonePWA m = parse_pwa_tail(cur);
  if (!cur.at_end()) cur.error("trailing input");
  return m;
}

}  // namespace fuzzlat
