#ifndef GCALC_RATIONAL_HPP
#define GCALC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace gcalc {

// Exact arbitrary-precision rational. All engine arithmetic is exact;
// there is no floating-point mode.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text: "p/q", "/1" omitted.
std::string to_string(const Rational& r);

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace gcalc

#endif
