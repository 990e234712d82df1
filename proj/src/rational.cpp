#include "fuzzlat/rational.hpp"

namespace fuzzlat {

std::string format_rat(const Rat& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string rat_decimal(const Rat& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rat mag = negative ? Rat(-r) : r;
  // round(mag * scale) via floor(mag * scale + 1/2)
  const Rat doubled = mag * scale * 2 + 1;
  const BigInt scaled = numerator(doubled) / (denominator(doubled) * 2);
  const BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string digits = frac.str();
    out += "." + std::string(places - digits.size(), '0') + digits;
  }
  return out;
}

}  // namespace fuzzlat
