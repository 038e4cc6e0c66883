#include "gcalc/matrix.hpp"

#include <algorithm>

#include "gcalc/errors.hpp"

namespace gcalc {

PolyMatrix identity_matrix(const ChartPtr& chart, size_t n) {
  PolyMatrix m(n, std::vector<SuperPolynomial>(
                      n, SuperPolynomial::zero(chart)));
  for (size_t i = 0; i < n; ++i)
    m[i][i] = SuperPolynomial::constant(chart, 1);
  return m;
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  const size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
  PolyMatrix r(n, std::vector<SuperPolynomial>(mcols));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw DomainError("matrix dimension mismatch");
    for (size_t j = 0; j < mcols; ++j) {
      SuperPolynomial s = a[i][0] * b[0][j];
      for (size_t l = 1; l < k; ++l) s = s + a[i][l] * b[l][j];
      r[i][j] = std::move(s);
    }
  }
  return r;
}

PolyMatrix matrix_add(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

PolyMatrix matrix_sub(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

bool matrix_is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

PolyMatrix matrix_body(const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = e.body();
  return r;
}

BodyInverse body_matrix_inverse(const ChartPtr& chart, const PolyMatrix& a) {
  BodyInverse out;
  const size_t n = a.size();
  if (n == 0) {
    out.invertible = true;
    out.det = SuperPolynomial::constant(chart, 1);
    return out;
  }
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("matrix is not square");
    for (const auto& e : row)
      if (!e.body()
               .operator==(e))  // entries must already be body (even) values
        throw InternalError("body_matrix_inverse on non-body entries");
  }
  // Faddeev-LeVerrier: M_1 = I; c_k = -tr(A M_k)/k; M_{k+1} = A M_k + c_k I.
  // Then det = (-1)^n c_n and A^{-1} = -M_n / c_n.
  PolyMatrix mk = identity_matrix(chart, n);
  SuperPolynomial ck = SuperPolynomial::zero(chart);
  PolyMatrix mn;  // M_n
  for (size_t k = 1; k <= n; ++k) {
    PolyMatrix p = matrix_mul(a, mk);
    SuperPolynomial tr = SuperPolynomial::zero(chart);
    for (size_t i = 0; i < n; ++i) tr = tr + p[i][i];
    ck = tr * Rational(-1, long(k));
    if (k == n) {
      mn = std::move(mk);
      break;
    }
    for (size_t i = 0; i < n; ++i) p[i][i] = p[i][i] + ck;
    mk = std::move(p);
  }
  SuperPolynomial det = (n % 2 == 0) ? ck : -ck;
  out.det = det;
  if (!det.is_unit_monomial()) return out;  // degenerate over the Laurent ring
  SuperPolynomial minus_inv_cn = -ck.unit_inverse();
  PolyMatrix inv = mn;
  for (auto& row : inv)
    for (auto& e : row) e = e * minus_inv_cn;
  out.invertible = true;
  out.inverse = std::move(inv);
  return out;
}

std::optional<PolyMatrix> super_matrix_inverse(const ChartPtr& chart,
                                               const PolyMatrix& a) {
  const size_t n = a.size();
  PolyMatrix a0 = matrix_body(a);
  BodyInverse b = body_matrix_inverse(chart, a0);
  if (!b.invertible) return std::nullopt;
  PolyMatrix nil = matrix_mul(b.inverse, matrix_sub(a, a0));
  // (I + N)^-1 = sum (-N)^j, finite because N's entries lie in the
  // nilpotent ideal generated by the odd generators
  PolyMatrix sum = identity_matrix(chart, n);
  PolyMatrix pw = identity_matrix(chart, n);
  const size_t cap = chart->odd_count() + 2;
  for (size_t j = 1; j <= cap; ++j) {
    pw = matrix_mul(pw, nil);
    for (auto& row : pw)
      for (auto& e : row) e = -e;
    if (matrix_is_zero(pw)) break;
    if (j == cap)
      throw InternalError("Neumann series failed to terminate");
    sum = matrix_add(sum, pw);
  }
  PolyMatrix inv = matrix_mul(sum, b.inverse);
  PolyMatrix check = matrix_mul(a, inv);
  if (!matrix_is_zero(matrix_sub(check, identity_matrix(chart, n))))
    throw InternalError("matrix inverse verification failed");
  return inv;
}

size_t exact_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  // clear denominators row-wise, then fraction-free Bareiss
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (size_t j = 0; j < cols; ++j)
      l = lcm(l, m[i][j].get_den());
    for (size_t j = 0; j < cols; ++j) {
      mpq_class v = m[i][j] * Rational(l);
      v.canonicalize();
      z[i][j] = v.get_num();
    }
  }
  size_t rank = 0;
  mpz_class prev(1);
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && z[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(z[pivot], z[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        mpz_class num = z[rank][col] * z[i][j] - z[i][col] * z[rank][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        z[i][j] = q;
      }
      z[i][col] = 0;
    }
    prev = z[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace gcalc
