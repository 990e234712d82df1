#pragma once

#include "fuzzlat/rational.hpp"

#include <vector>

namespace fuzzlat {

enum class Tag : unsigned char { All, QOnly, IOnly };

const char* tag_name(Tag t);

// Building block of a representable subset of [0,1]: a rational-endpoint
// interval restricted to all reals, to its rationals, or to its irrationals.
struct Atom {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;
  Tag tag = Tag::All;

  // Validates 0 <= lo <= hi <= 1 and rejects empty atoms: inverted spans,
  // half-open points, and IOnly points (a rational point has no irrational
  // part). QOnly points normalize to All.
  static Atom make(Rat lo, Rat hi, bool lo_closed, bool hi_closed,
                   Tag tag = Tag::All);
  static Atom point(Rat value);
  static Atom closed(Rat lo, Rat hi, Tag tag = Tag::All);

  bool is_point() const { return lo == hi; }
  bool operator==(const Atom&) const = default;
};

struct Bounds {
  Rat inf;
  Rat sup;
  bool inf_attained = false;
  bool sup_attained = false;

  bool operator==(const Bounds&) const = default;
};

class RealSubset;

namespace detail {
// Trusted constructor for atoms already in canonical form (sweep output).
RealSubset from_canonical_atoms(std::vector<Atom> atoms);
}  // namespace detail

// Canonical finite union of atoms. Two RealSubsets denote the same point set
// iff their atom lists are identical, so operator== decides set equality.
class RealSubset {
 public:
  RealSubset() = default;  // the empty set

  static RealSubset canonicalize(const std::vector<Atom>& raw);
  static RealSubset of(const Atom& a) { return canonicalize({a}); }
  static RealSubset unit() { return of(Atom::closed(0, 1)); }

  // Closed [lo,hi], or empty when lo > hi (inverted windows from the
  // S-operators denote the empty set rather than an error).
  static RealSubset closed_span(const Rat& lo, const Rat& hi);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_empty() const { return atoms_.empty(); }

  bool operator==(const RealSubset&) const = default;

 private:
  friend RealSubset detail::from_canonical_atoms(std::vector<Atom>);
  std::vector<Atom> atoms_;
};

RealSubset set_union(const RealSubset& a, const RealSubset& b);
RealSubset set_intersect(const RealSubset& a, const RealSubset& b);
RealSubset set_complement(const RealSubset& a);

// Topological closure within [0,1]: every atom becomes a closed All atom.
RealSubset set_closure(const RealSubset& a);
bool is_closed(const RealSubset& a);

// A subseteq B as point sets, decided by is_empty(A \cap complement(B)).
bool subset_of(const RealSubset& a, const RealSubset& b);

// Membership of the rational point q (0 <= q <= 1).
bool contains(const RealSubset& a, const Rat& q);

// True when the atom contains the rational point q.
bool atom_contains_rational(const Atom& a, const Rat& q);

// inf/sup with attainment flags. Throws Errc::EmptySet on the empty set.
Bounds bounds(const RealSubset& a);

// Per-piece Q/I coverage of a canonical set over the elementary decomposition
// induced by `cuts` (sorted distinct rationals that include every atom
// endpoint of `a`). Shared by the set sweep, grade functions and rendering.
struct SliceCoverage {
  std::vector<unsigned char> point_in;  // size cuts.size()
  std::vector<unsigned char> gap_q;     // size cuts.size() - 1
  std::vector<unsigned char> gap_i;
};

SliceCoverage slice_coverage(const RealSubset& a, const std::vector<Rat>& cuts);

// Endpoints of all atoms, sorted and deduplicated.
std::vector<Rat> atom_endpoints(const RealSubset& a);

std::vector<Rat> merge_cuts(std::vector<Rat> a, const std::vector<Rat>& b);

}  // namespace fuzzlat
