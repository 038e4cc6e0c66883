#ifndef GCALC_COURANT_HPP
#define GCALC_COURANT_HPP

#include <vector>

#include "gcalc/brackets.hpp"
#include "gcalc/forms.hpp"
#include "gcalc/polynomial.hpp"

namespace gcalc {

// Structure data of a contact Courant algebroid in the coordinate model:
// base dimension m, fiber dimension q, constant pseudo-Euclidean g, anchor
// coefficients r_i^a(x) and r_i(x), and the totally antisymmetric
// A_ijk(x). Base polynomials live on an x-only chart.
struct CourantSpec {
  size_t m = 0;
  size_t q = 0;
  ChartPtr base;  // x1..xm, even, weight (0)
  std::vector<std::vector<Rational>> g;               // q x q
  std::vector<std::vector<SuperPolynomial>> r_coef;   // [i][a]
  std::vector<SuperPolynomial> r_scalar;              // [i]
  std::vector<std::vector<std::vector<SuperPolynomial>>> a;  // [i][j][k]

  // Builds an empty (zero r, zero A) spec over a fresh base chart.
  static CourantSpec zero(size_t m, size_t q,
                          std::vector<std::vector<Rational>> g);
  // Validates symmetry/invertibility of g, dimensions, antisymmetry of A.
  void validate() const;
};

// The chart (t, x^a, theta^i, z, p_a), its symplectic form, the Poisson
// tensor obtained by inversion, and the cubic Hamiltonian.
struct CourantModel {
  CourantSpec spec;
  ChartPtr chart;
  TwoForm omega;
  SuperPolynomial tensor;    // quadratic Hamiltonian of the Poisson tensor
  BracketCarrier carrier;    // shifted cotangent chart of `chart`
  SuperPolynomial cubic;     // the cubic Hamiltonian built from the data

  // Poisson bracket of the model's symplectic form.
  SuperPolynomial poisson(const SuperPolynomial& f,
                          const SuperPolynomial& g) const;
  // Derived bracket of the cubic Hamiltonian.
  SuperPolynomial dorfman(const SuperPolynomial& f,
                          const SuperPolynomial& g) const;
  // Homogeneous basis section e_i = t g_ij theta^j.
  SuperPolynomial section(size_t i) const;
  // Anchor action rho(u)(f) = {{u, H}, f} for basic f(t, x).
  SuperPolynomial anchor(const SuperPolynomial& u,
                         const SuperPolynomial& f) const;
  // Derivation D: basic f(x) -> section, <D(f), e> = rho(e)(f).
  SuperPolynomial derivation(const SuperPolynomial& f) const;
};

CourantModel build_chart_and_hamiltonian(const CourantSpec& s);

struct MasterReport {
  bool pass = false;
  SuperPolynomial residual;
};
MasterReport check_master_equation(const CourantModel& model);

struct CourantData {
  MasterReport master;
  std::vector<std::vector<SuperPolynomial>> pairing;  // {{e_i, e_j}}
  std::vector<std::vector<Rational>> g_recovered;
  std::vector<std::vector<SuperPolynomial>> bracket;  // {e_i, e_j} sections
  std::vector<std::vector<std::vector<SuperPolynomial>>> triple;  // <{e,e},e>
  std::vector<std::vector<SuperPolynomial>> r_coef_recovered;
  std::vector<SuperPolynomial> r_scalar_recovered;
  std::vector<std::vector<std::vector<SuperPolynomial>>> a_recovered;
  // named axiom residuals; all must vanish
  std::vector<std::pair<std::string, SuperPolynomial>> axiom_residuals;
  bool axioms_pass = false;
};

// Extracts the classical structure tables via derived brackets and checks
// the algebroid axioms. Throws PreconditionError when the master equation
// fails, unless require_master is false (extraction is still meaningful
// for raw data recovery).
CourantData courant_data(const CourantModel& model, bool require_master = true);

}  // namespace gcalc

#endif
