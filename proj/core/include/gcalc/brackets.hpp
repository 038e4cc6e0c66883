#ifndef GCALC_BRACKETS_HPP
#define GCALC_BRACKETS_HPP

#include <vector>

#include "gcalc/polynomial.hpp"

namespace gcalc {

// Canonical symplectic bracket carrier: a fully darboux-paired chart.
// The bracket parity is odd exactly when the momenta are parity-reversed.
class BracketCarrier {
 public:
  // Validates: chart has pairs, every generator belongs to exactly one
  // pair, and the base/momentum parity offset is uniform.
  static BracketCarrier on(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  Parity bracket_parity() const { return k_; }
  const std::vector<DarbouxPair>& pairs() const {
    return chart_->darboux_pairs();
  }

 private:
  BracketCarrier(ChartPtr c, Parity k) : chart_(std::move(c)), k_(k) {}
  ChartPtr chart_;
  Parity k_;
};

// Bidifferential canonical bracket, calibrated by {p_a, x^b} = delta.
SuperPolynomial canonical_bracket(const BracketCarrier& b,
                                  const SuperPolynomial& f,
                                  const SuperPolynomial& g);

// Derived bracket {F, G}_H = {{F, H}, G}.
SuperPolynomial derived_bracket(const BracketCarrier& b,
                                const SuperPolynomial& h,
                                const SuperPolynomial& f,
                                const SuperPolynomial& g);

// {H, H} == 0 exactly.
bool is_homological(const BracketCarrier& b, const SuperPolynomial& h);

// Maps a polynomial to another chart by generator name. Koszul signs of
// reordering odd factors are handled. Throws DomainError when a generator
// is missing on the target.
SuperPolynomial transport(const SuperPolynomial& p, const ChartPtr& target);

// Coordinate matrix of the derived bracket of a quadratic Hamiltonian:
// entry (a, b) is {u^a, u^b}_H over the carrier's pair bases, in pair
// order.
std::vector<std::vector<SuperPolynomial>> bracket_matrix(
    const BracketCarrier& b, const SuperPolynomial& h);

// Reconstructs the quadratic Hamiltonian whose derived coordinate bracket
// matrix equals `m` (entries are base-variable polynomials transported to
// the carrier chart). Throws DomainError when no quadratic Hamiltonian
// realizes m.
SuperPolynomial hamiltonian_from_bracket_matrix(
    const BracketCarrier& b, const std::vector<std::vector<SuperPolynomial>>& m);

}  // namespace gcalc

#endif
