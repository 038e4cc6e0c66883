#ifndef GCALC_COHOMOLOGY_HPP
#define GCALC_COHOMOLOGY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gcalc/brackets.hpp"
#include "gcalc/forms.hpp"
#include "gcalc/matrix.hpp"

namespace gcalc {

// Monomial basis of one cochain degree.
struct CochainSpace {
  long degree = 0;
  std::vector<SuperPolynomial> basis;  // canonical monomial basis
};

// Degree-truncated complex of weight-selected monomial subspaces with the
// exact matrices of the differential between consecutive degrees.
struct GradedComplex {
  std::vector<CochainSpace> spaces;
  // matrices[k]: spaces[k] -> spaces[k+1], rational entries, row-major
  // (rows index the target basis)
  std::vector<std::vector<std::vector<Rational>>> matrices;
};

// Assigns a monomial to a cochain degree, or rejects it. The selector sees
// the weight vector of the monomial on the carrier chart.
using WeightSelector = std::function<std::optional<long>(const Weight&)>;

// Builds the complex of d_J = {J, .} on the selected monomial subspaces of
// degrees 0..truncation. Requires {J,J} = 0 (PreconditionError) and that
// the image of every selected basis monomial stays inside the selected
// spaces (DomainError with a closure message otherwise).
//
// Basis enumeration draws exponents from [0, exponent_bound] for plain
// even generators, [-exponent_bound, exponent_bound] for invertible ones,
// and {0, 1} for odd generators.
GradedComplex differential_from_hamiltonian(const BracketCarrier& b,
                                            const SuperPolynomial& j,
                                            const WeightSelector& select,
                                            long truncation,
                                            long exponent_bound = 3);

// Product of consecutive matrices vanishes exactly.
bool check_complex(const GradedComplex& c);

// dim ker(d_k) - rank(d_{k-1}) per degree, exact ranks.
std::vector<long> cohomology_dims(const GradedComplex& c);

// The operator (mu, nu) -> (d mu, mu + d nu) on pairs of polynomial forms
// over an m-dimensional even base, the coordinate model of the twisted
// de Rham complex.
class TwistedDeRham {
 public:
  explicit TwistedDeRham(size_t m);

  const FormSpace& forms() const { return fs_; }
  std::pair<SuperPolynomial, SuperPolynomial> apply(
      const SuperPolynomial& mu, const SuperPolynomial& nu) const;

 private:
  FormSpace fs_;
};

// Fixture: the chart and quadratic Hamiltonian of the canonical linear
// structure over an m-dimensional base whose reduced differential is the
// twisted de Rham operator, together with the selector picking the
// 1-homogeneous basic cochains.
struct TwistedDeRhamModel {
  BracketCarrier carrier;
  SuperPolynomial hamiltonian;
  WeightSelector selector;
};
TwistedDeRhamModel twisted_de_rham_model(size_t m);

}  // namespace gcalc

#endif
