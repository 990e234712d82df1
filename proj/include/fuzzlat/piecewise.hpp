#pragma once

#include "fuzzlat/grade_lattices.hpp"
#include "fuzzlat/set_algebra.hpp"

#include <string>
#include <vector>

namespace fuzzlat {

struct AffineMap {
  Rat slope;
  Rat offset;

  Rat eval(const Rat& t) const { return slope * t + offset; }
  static AffineMap constant(const Rat& v) { return {Rat(0), v}; }
  static AffineMap identity() { return {Rat(1), Rat(0)}; }

  bool operator==(const AffineMap&) const = default;
};

struct Piece {
  Atom atom;
  AffineMap map;

  bool operator==(const Piece&) const = default;
};

// Elementary view of a grade function: values at the cut points plus the
// affine maps carried by the rational and irrational sides of each gap.
struct FnDecomposition {
  std::vector<Rat> cuts;          // sorted, cuts.front()==0, cuts.back()==1
  std::vector<Rat> point_values;  // size cuts.size()
  std::vector<AffineMap> gap_q;   // size cuts.size()-1
  std::vector<AffineMap> gap_i;
};

// Total function [0,1] -> [0,1] represented by tagged piecewise-affine
// pieces whose atoms partition [0,1]. Canonical, so operator== decides
// equality as functions.
class PiecewiseFn {
 public:
  PiecewiseFn() : pieces_{{Atom::closed(Rat(0), Rat(1)),
                           AffineMap::constant(Rat(0))}} {}

  static PiecewiseFn constant(const Rat& v);
  static PiecewiseFn identity();
  static PiecewiseFn assemble(const FnDecomposition& d);

  Rat eval(const Rat& t) const;
  const std::vector<Piece>& pieces() const { return pieces_; }

  bool operator==(const PiecewiseFn&) const = default;

 private:
  struct raw_t {};
  explicit PiecewiseFn(raw_t) {}
  std::vector<Piece> pieces_;
};

// Elementary view over a cut list that must contain every piece endpoint.
FnDecomposition decompose(const PiecewiseFn& f, std::vector<Rat> cuts);
std::vector<Rat> fn_cuts(const PiecewiseFn& f);

// Pointwise max/min, splitting pieces at exact affine crossings.
PiecewiseFn pw_max(const PiecewiseFn& f, const PiecewiseFn& g);
PiecewiseFn pw_min(const PiecewiseFn& f, const PiecewiseFn& g);

// Pointwise order of grade functions.
bool pw_leq(const PiecewiseFn& f, const PiecewiseFn& g);

// 1 on the set, 0 off it.
PiecewiseFn indicator(const RealSubset& s);

// Grade function of a nonempty set S with infimum m: the constant m up to m,
// the identity on S past m, and 0 elsewhere. Injective on closed sets (where
// it is a lattice embedding into (pw_max, pw_min)) but not on arbitrary ones.
PiecewiseFn set_profile(const RealSubset& s);
PiecewiseFn closed_profile(const ClosedSubset& c);

// closed_profile with the identity graph replaced by a strictly increasing
// warp f with f(0)=0 and f(1)=1 (InvalidF otherwise).
PiecewiseFn warped_profile(const ClosedSubset& c, const MonotonePWA& f);

// Single-grade constructors: the constant function, the indicator of the
// point {a}, and the indicator of [0,a].
PiecewiseFn constant_grade(const Rat& a);
PiecewiseFn point_indicator(const Rat& a);
PiecewiseFn below_indicator(const Rat& a);

std::string describe(const PiecewiseFn& f);

}  // namespace fuzzlat
