#ifndef GCALC_MATRIX_HPP
#define GCALC_MATRIX_HPP

#include <optional>
#include <vector>

#include "gcalc/polynomial.hpp"

namespace gcalc {

using PolyMatrix = std::vector<std::vector<SuperPolynomial>>;

PolyMatrix identity_matrix(const ChartPtr& chart, size_t n);
PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_sub(const PolyMatrix& a, const PolyMatrix& b);
bool matrix_is_zero(const PolyMatrix& a);
PolyMatrix matrix_body(const PolyMatrix& a);

// Inverse of a matrix with commuting (body) entries via the
// Faddeev-LeVerrier adjugate; succeeds iff det is a unit of the Laurent
// algebra (nonzero rational times a monomial in invertible generators).
struct BodyInverse {
  bool invertible = false;
  PolyMatrix inverse;
  SuperPolynomial det;
};
BodyInverse body_matrix_inverse(const ChartPtr& chart, const PolyMatrix& a);

// Full inverse over the supercommutative ring: body inverse plus a finite
// Neumann series in the nilpotent odd part. Empty result when the body is
// not invertible.
std::optional<PolyMatrix> super_matrix_inverse(const ChartPtr& chart,
                                               const PolyMatrix& a);

// Exact rank of a rational matrix (fraction-free Bareiss elimination on the
// denominator-cleared integer matrix).
size_t exact_rank(std::vector<std::vector<Rational>> m);

}  // namespace gcalc

#endif
