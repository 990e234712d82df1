#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fuzzlat {

// Exact rational arithmetic. cpp_rational keeps the canonical reduced form
// (gcd-free, positive denominator) after every operation.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat make_rat(std::int64_t num, std::int64_t den) {
  return Rat(BigInt(num), BigInt(den));
}

inline bool in_unit(const Rat& r) { return r >= 0 && r <= 1; }

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// "p/q", or a bare integer when q == 1. Round-trips through the expression
// grammar (rat := decimal | int "/" int).
std::string format_rat(const Rat& r);

// Exact fixed-point decimal with `places` digits, rounded half away from
// zero. Used for SVG geometry so identical inputs yield identical bytes.
std::string rat_decimal(const Rat& r, int places);

}  // namespace fuzzlat
