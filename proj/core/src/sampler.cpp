#include "gcalc/sampler.hpp"

namespace gcalc {

uint64_t Sampler::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Sampler::uniform(long lo, long hi) {
  if (hi <= lo) return lo;
  uint64_t span = uint64_t(hi - lo) + 1;
  return lo + long(next() % span);
}

Rational Sampler::rational(long bound, long den_bound) {
  long num = uniform(1, bound);
  if (next() & 1) num = -num;
  long den = uniform(1, den_bound);
  return rat(num, den);
}

SuperPolynomial Sampler::polynomial(const ChartPtr& chart, long degree,
                                    long terms) {
  SuperPolynomial p = SuperPolynomial::zero(chart);
  for (long t = 0; t < terms; ++t) {
    long d = uniform(0, degree);
    std::vector<std::pair<uint32_t, int64_t>> exps;
    for (long k = 0; k < d; ++k) {
      uint32_t i = uint32_t(uniform(0, long(chart->size()) - 1));
      int64_t e = 1;
      if (chart->gen(i).invertible && (next() % 4 == 0)) e = -1;
      exps.push_back({i, e});
    }
    p = p + SuperPolynomial::term(chart, rational(), exps);
  }
  return p;
}

SuperPolynomial Sampler::parity_homogeneous(const ChartPtr& chart,
                                            long degree, long terms,
                                            Parity parity) {
  SuperPolynomial p = polynomial(chart, degree, terms);
  Rational half(1, 2);
  SuperPolynomial even = (p + p.parity_map()) * half;
  SuperPolynomial odd = (p - p.parity_map()) * half;
  return parity == Parity::Even ? even : odd;
}

}  // namespace gcalc
