#pragma once

#include "fuzzlat/errors.hpp"
#include "fuzzlat/grade_lattices.hpp"
#include "fuzzlat/piecewise.hpp"
#include "fuzzlat/set_algebra.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzlat {

class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) fail(Errc::Range, "universe must be nonempty");
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::Range, "universe labels must be distinct");
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    fail(Errc::UnknownName, "label not in universe: " + std::string(label));
  }

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> labels_;
};

// Finite-universe fuzzy set with grades of kind G. One instantiation per
// family: Rat, Interval, RealSubset, ClosedSubset, PiecewiseFn.
template <class G>
class FuzzySet {
 public:
  FuzzySet(Universe universe, std::vector<G> grades)
      : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (grades_.size() != universe_.size())
      fail(Errc::Range, "one grade per universe label required");
  }

  const Universe& universe() const { return universe_; }
  const std::vector<G>& grades() const { return grades_; }
  const G& grade(std::size_t i) const { return grades_.at(i); }
  const G& grade(std::string_view label) const {
    return grades_[universe_.index_of(label)];
  }

  bool operator==(const FuzzySet&) const = default;

 private:
  Universe universe_;
  std::vector<G> grades_;
};

using Fs = FuzzySet<Rat>;
using Ivfs = FuzzySet<Interval>;
using Svfs = FuzzySet<RealSubset>;
using Cvfs = FuzzySet<ClosedSubset>;
using T2fs = FuzzySet<PiecewiseFn>;

template <class G>
void require_same_universe(const FuzzySet<G>& a, const FuzzySet<G>& b) {
  if (!(a.universe() == b.universe()))
    fail(Errc::UniverseMismatch, "operands live on different universes");
}

template <class G, class Op>
FuzzySet<G> pointwise(const FuzzySet<G>& a, const FuzzySet<G>& b, Op&& op) {
  require_same_universe(a, b);
  std::vector<G> grades;
  grades.reserve(a.grades().size());
  for (std::size_t i = 0; i < a.grades().size(); ++i)
    grades.push_back(op(a.grade(i), b.grade(i)));
  return FuzzySet<G>(a.universe(), std::move(grades));
}

template <class G, class Leq>
bool pointwise_leq(const FuzzySet<G>& a, const FuzzySet<G>& b, Leq&& leq) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.grades().size(); ++i)
    if (!leq(a.grade(i), b.grade(i))) return false;
  return true;
}

template <class A, class B, class Map>
FuzzySet<B> lift(const FuzzySet<A>& a, Map&& grade_map) {
  std::vector<B> grades;
  grades.reserve(a.grades().size());
  for (const A& g : a.grades()) grades.push_back(grade_map(g));
  return FuzzySet<B>(a.universe(), std::move(grades));
}

// --- family operators ------------------------------------------------------

Fs fs_join(const Fs& a, const Fs& b);
Fs fs_meet(const Fs& a, const Fs& b);
bool fs_leq(const Fs& a, const Fs& b);

Ivfs ivfs_join(const Ivfs& a, const Ivfs& b);
Ivfs ivfs_meet(const Ivfs& a, const Ivfs& b);
bool ivfs_leq(const Ivfs& a, const Ivfs& b);

// Set-valued operators from plain union/intersection. The strict variant
// refuses empty meet grades (EmptyGrade); the empty-allowed variant is a
// complete lattice with the constant-empty set at the bottom.
Svfs svfs_join(const Svfs& a, const Svfs& b);
Svfs svfs_meet(const Svfs& a, const Svfs& b, bool allow_empty);
bool svfs_subset_leq(const Svfs& a, const Svfs& b);

// The inf/sup/window order, lifted pointwise (grades must be nonempty).
bool svfs_s_leq(const Svfs& a, const Svfs& b);

Cvfs cvfs_join(const Cvfs& a, const Cvfs& b);
Cvfs cvfs_meet(const Cvfs& a, const Cvfs& b);
bool cvfs_leq(const Cvfs& a, const Cvfs& b);

T2fs t2fs_join(const T2fs& a, const T2fs& b);
T2fs t2fs_meet(const T2fs& a, const T2fs& b);
bool t2fs_leq(const T2fs& a, const T2fs& b);

// --- lifted grade maps -----------------------------------------------------

Ivfs as_diagonal_intervals(const Fs& a);    // t -> [t,t]
Ivfs as_upper_intervals(const Fs& a);       // t -> [t,1]
Ivfs as_lower_intervals(const Fs& a);       // t -> [0,t]
Ivfs as_pair_intervals(const Fs& a, const MonotonePWA& h1, const MonotonePWA& h2);

Svfs as_singleton_sets(const Fs& a);        // t -> {t}; not a lattice map
Svfs as_downsets(const Fs& a);              // t -> [0,t]; lattice embedding
Svfs intervals_as_sets(const Ivfs& a);      // [a,b] as a subset
Cvfs intervals_as_closed(const Ivfs& a);    // [a,b] as a closed set
Svfs split_intervals(const Ivfs& a);        // xi pointwise; lattice embedding
Svfs closed_as_sets(const Cvfs& a);

T2fs as_constant_grades(const Fs& a);       // t -> constant t
T2fs as_point_indicators(const Fs& a);      // t -> 1 at {t}; not a lattice map
T2fs as_below_indicators(const Fs& a);      // t -> 1 on [0,t]
T2fs sets_as_indicators(const Svfs& a);     // S -> indicator; lattice embedding
T2fs closed_as_profiles(const Cvfs& a);
T2fs closed_as_warped_profiles(const Cvfs& a, const MonotonePWA& f);

// --- level cuts ------------------------------------------------------------

// Indices of labels with grade >= t.
std::vector<std::size_t> cut(const Fs& a, const Rat& t);

// Finite step encoding of t -> cut(A,t): the distinct positive grade values
// with their (antitone) cuts.
struct CutFamily {
  Universe base;
  std::vector<Rat> thresholds;                  // sorted, in (0,1]
  std::vector<std::vector<std::size_t>> sets;   // nested: sets[k+1] subset of sets[k]

  bool operator==(const CutFamily&) const = default;
};

CutFamily cut_family(const Fs& a);

// Inverse of cut_family: grade(x) = max threshold whose cut contains x, and 0
// when none does. Throws InvalidNesting when the sets are not antitone.
Fs cut_reconstruct(const CutFamily& cf);

}  // namespace fuzzlat
