#ifndef GCALC_FORMS_HPP
#define GCALC_FORMS_HPP

#include <optional>
#include <vector>

#include "gcalc/brackets.hpp"
#include "gcalc/matrix.hpp"
#include "gcalc/polynomial.hpp"

namespace gcalc {

// Differential forms are polynomial functions on the parity-reversed
// tangent lift: base generators first, then one fiber generator "d<name>"
// per base generator.
struct FormSpace {
  ChartPtr base;
  ChartPtr lift;  // tangent_lift_chart(base, /*reverse=*/true)

  static FormSpace over(const ChartPtr& base);

  size_t base_count() const { return base->size(); }
  uint32_t fiber_index(uint32_t base_index) const {
    return uint32_t(base->size()) + base_index;
  }
  // de Rham differential on polynomial forms.
  SuperPolynomial d(const SuperPolynomial& f) const;
  // fiber degree when homogeneous, -1 when mixed, 0 for the zero form
  long form_degree(const SuperPolynomial& f) const;
};

// One-form alpha = sum_a alpha_a dx^a with a declared parity: even means
// g(alpha_a) = g(x^a), odd means g(alpha_a) = g(x^a) + 1.
struct OneForm {
  ChartPtr chart;
  std::vector<SuperPolynomial> coeffs;  // indexed by generator
  Parity declared_parity = Parity::Even;

  static OneForm make(const ChartPtr& chart,
                      std::vector<SuperPolynomial> coeffs, Parity parity);
  // every nonzero coefficient parity-homogeneous of the declared offset
  bool parity_consistent() const;
  // the form as a polynomial on a form space over the same chart
  SuperPolynomial as_polynomial(const FormSpace& fs) const;
};

// Two-form stored as its polynomial on the form space of the chart.
// entry(a, b) satisfies entry(a,b) = -(-1)^{g_a g_b} entry(b,a).
class TwoForm {
 public:
  static TwoForm from_polynomial(const FormSpace& fs, SuperPolynomial omega);

  const FormSpace& space() const { return fs_; }
  const ChartPtr& chart() const { return fs_.base; }
  const SuperPolynomial& polynomial() const { return omega_; }

  SuperPolynomial entry(uint32_t a, uint32_t b) const;
  bool is_closed() const;
  // parity of the form (mixed forms are not a single two-form)
  ParityGrade parity() const;

 private:
  TwoForm(FormSpace fs, SuperPolynomial w)
      : fs_(std::move(fs)), omega_(std::move(w)) {}
  FormSpace fs_;
  SuperPolynomial omega_;
};

// omega = d(t . alpha) on the chart extended by the fiber coordinate t.
TwoForm symplectize(const OneForm& alpha);

struct Inversion {
  bool nondegenerate = false;
  SuperPolynomial hamiltonian;               // valid when nondegenerate
  std::optional<BracketCarrier> carrier;     // shifted cotangent chart
  SuperPolynomial body_det;                  // diagnostic
};

// Poisson tensor of a two-form as a quadratic Hamiltonian on the shifted
// cotangent chart (parity-reversed momenta for an even form, plain for an
// odd form). Degeneracy is reported as a value, not an exception.
Inversion invert_two_form(const TwoForm& omega, long lift_weight = 1);

// Inverse direction; throws DomainError when the Hamiltonian is not the
// tensor of any two-form.
TwoForm tensor_to_form(const BracketCarrier& carrier,
                       const SuperPolynomial& hamiltonian);

bool check_contact(const OneForm& alpha);

// All coordinate brackets {u_i, u_j} of the symplectization of alpha, on
// the extended chart.
PolyMatrix symplectization_bracket_table(const OneForm& alpha);

// Symplectization with its inversion, computed once.
class LegendreBracket {
 public:
  // Throws PreconditionError when alpha is not contact.
  explicit LegendreBracket(const OneForm& alpha);

  // {F, G}_alpha = {tF, tG}_omega / t on basic F, G (no t).
  SuperPolynomial operator()(const SuperPolynomial& f,
                             const SuperPolynomial& g) const;

  const BracketCarrier& carrier() const { return *inv_.carrier; }
  const SuperPolynomial& hamiltonian() const { return inv_.hamiltonian; }
  const ChartPtr& base_chart() const { return base_; }

 private:
  ChartPtr base_;
  Inversion inv_;
};

// Legendre bracket {F, G}_alpha = {tF, tG}_omega / t on basic F, G.
// Throws PreconditionError when alpha is not contact.
SuperPolynomial legendre_bracket(const OneForm& alpha,
                                 const SuperPolynomial& f,
                                 const SuperPolynomial& g);

}  // namespace gcalc

#endif
