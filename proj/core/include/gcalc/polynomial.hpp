#ifndef GCALC_POLYNOMIAL_HPP
#define GCALC_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcalc/chart.hpp"
#include "gcalc/rational.hpp"

namespace gcalc {

// Sign-normalized monomial: even exponents sparse and sorted by generator
// index, odd factors as a strictly increasing index sequence. The Koszul
// sign of reordering is absorbed into the coefficient by the polynomial
// layer.
class Monomial {
 public:
  Monomial() = default;

  const std::vector<std::pair<uint32_t, int64_t>>& even() const {
    return even_;
  }
  const std::vector<uint32_t>& odd() const { return odd_; }

  bool is_unit() const { return even_.empty() && odd_.empty(); }
  int64_t even_exponent(uint32_t idx) const;
  bool has_odd(uint32_t idx) const;

  bool operator==(const Monomial& o) const {
    return even_ == o.even_ && odd_ == o.odd_;
  }
  // Canonical term order: total degree, then lexicographic by generator
  // index with larger exponents first. Deterministic printing and golden
  // tests rely on it.
  bool operator<(const Monomial& o) const;

  Parity parity(const Chart& chart) const;
  Weight weight(const Chart& chart) const;
  long total_degree() const;

 private:
  friend class SuperPolynomial;
  friend struct MonomialBuilder;
  std::vector<std::pair<uint32_t, int64_t>> even_;
  std::vector<uint32_t> odd_;
};

struct MonomialBuilder {
  // exponents: (generator index, exponent); odd exponents must be 0/1 at
  // this level (duplicates and squares are the polynomial layer's job).
  static Monomial make(const Chart& chart,
                       const std::vector<std::pair<uint32_t, int64_t>>& exps);
};

enum class ParityGrade { Even, Odd, Mixed };

struct GradeInfo {
  bool is_zero = false;
  ParityGrade parity = ParityGrade::Even;
  bool weight_homogeneous = true;
  Weight weight;  // meaningful iff weight_homogeneous && !is_zero
};

// Element of the supercommutative Laurent polynomial algebra of a chart.
// Immutable value semantics; exact rational coefficients; no zero terms
// stored.
class SuperPolynomial {
 public:
  SuperPolynomial() = default;  // zero on a null chart; usable as a ghost
  explicit SuperPolynomial(ChartPtr chart) : chart_(std::move(chart)) {}

  static SuperPolynomial zero(ChartPtr chart);
  static SuperPolynomial constant(ChartPtr chart, const Rational& c);
  static SuperPolynomial generator(const ChartPtr& chart, uint32_t index);
  static SuperPolynomial generator(const ChartPtr& chart,
                                   const std::string& name);
  // term from (index, exponent) pairs; validates Laurent legality and kills
  // odd squares.
  static SuperPolynomial term(
      const ChartPtr& chart, const Rational& coeff,
      const std::vector<std::pair<uint32_t, int64_t>>& exps);

  const ChartPtr& chart() const { return chart_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool operator==(const SuperPolynomial& o) const;
  bool operator!=(const SuperPolynomial& o) const { return !(*this == o); }

  SuperPolynomial operator-() const;
  SuperPolynomial operator+(const SuperPolynomial& o) const;
  SuperPolynomial operator-(const SuperPolynomial& o) const;
  SuperPolynomial operator*(const SuperPolynomial& o) const;
  SuperPolynomial operator*(const Rational& c) const;
  friend SuperPolynomial operator*(const Rational& c,
                                   const SuperPolynomial& p) {
    return p * c;
  }

  SuperPolynomial pow(long k) const;  // k >= 0, or k < 0 for unit monomials

  // Left graded derivative with respect to generator v.
  SuperPolynomial partial_left(uint32_t v) const;
  // Right graded derivative (sign counts odd factors to the right of v).
  SuperPolynomial partial_right(uint32_t v) const;

  GradeInfo grade() const;
  // Negates odd-parity terms; involution.
  SuperPolynomial parity_map() const;
  // Drops every term containing an odd factor.
  SuperPolynomial body() const;

  // x_v -> c * x_v. Exact; used by homogeneity checks.
  SuperPolynomial scale_generator(uint32_t v, const Rational& c) const;

  // Coefficient of a monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  // Max |exponent| over terms for generator v.
  int64_t degree_in(uint32_t v) const;

  // True when the polynomial is c * (monomial in invertible generators),
  // i.e. a unit of the Laurent algebra.
  bool is_unit_monomial() const;
  SuperPolynomial unit_inverse() const;  // throws DomainError when not a unit

  std::string to_string() const;

 private:
  void add_term(Monomial m, Rational c);  // merges, drops zeros
  ChartPtr chart_;
  std::map<Monomial, Rational> terms_;
};

// Named-entry convenience for fixtures/tests: product of name^exp factors.
SuperPolynomial make_term(
    const ChartPtr& chart, const Rational& coeff,
    const std::vector<std::pair<std::string, int64_t>>& factors);

std::string to_string(const SuperPolynomial& p);

}  // namespace gcalc

#endif
