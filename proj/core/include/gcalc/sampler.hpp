#ifndef GCALC_SAMPLER_HPP
#define GCALC_SAMPLER_HPP

#include <cstdint>

#include "gcalc/polynomial.hpp"

namespace gcalc {

// Deterministic generator for randomized exact checks. splitmix64 keeps
// the streams identical across platforms and standard libraries.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // uniform in [lo, hi]
  long uniform(long lo, long hi);
  // nonzero numerator in [-bound, bound], denominator in [1, den_bound]
  Rational rational(long bound = 4, long den_bound = 3);

  // Random polynomial: up to `terms` monomials of total degree <= degree.
  // Exponents of invertible generators may dip to -1. Colliding odd
  // factors collapse, so fewer terms may survive.
  SuperPolynomial polynomial(const ChartPtr& chart, long degree, long terms);

  // Splits off a random parity-homogeneous polynomial (retries via parity
  // projection; may return zero).
  SuperPolynomial parity_homogeneous(const ChartPtr& chart, long degree,
                                     long terms, Parity parity);

 private:
  uint64_t state_;
};

}  // namespace gcalc

#endif
