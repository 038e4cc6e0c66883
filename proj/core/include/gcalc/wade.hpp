#ifndef GCALC_WADE_HPP
#define GCALC_WADE_HPP

#include <vector>

#include "gcalc/polynomial.hpp"

namespace gcalc {

// Section (X, f) + (alpha, g) of (R x TM) + (R* x T*M) over a purely even
// base R^m with polynomial components.
struct WadeSection {
  ChartPtr base;                        // x1..xm, purely even
  std::vector<SuperPolynomial> vec;     // X components
  SuperPolynomial f;
  std::vector<SuperPolynomial> form;    // alpha components
  SuperPolynomial g;

  static WadeSection zero(const ChartPtr& base);
};

// Loday bracket of the canonical contact Courant structure on sections,
// in classical Cartan-calculus form.
WadeSection wade_bracket(const WadeSection& u, const WadeSection& v);

// Pseudo-Euclidean product <u, v> = (i_X1 a2 + i_X2 a1 + f1 g2 + f2 g1)/2.
SuperPolynomial wade_pairing(const WadeSection& u, const WadeSection& v);

// Anchor as a first-order operator: rho(u)(h) = X(h) + f h.
SuperPolynomial wade_anchor_apply(const WadeSection& u,
                                  const SuperPolynomial& h);

}  // namespace gcalc

#endif
