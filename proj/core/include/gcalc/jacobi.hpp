#ifndef GCALC_JACOBI_HPP
#define GCALC_JACOBI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gcalc/brackets.hpp"
#include "gcalc/polynomial.hpp"

namespace gcalc {

// Jacobi structure data (Lambda, Gamma, f) on a base chart. The three
// components live on the shifted cotangent chart of the base: momenta
// parity-reversed for an even structure (multivector fields), plain for an
// odd one (symmetric multivector fields).
class JacobiTriple {
 public:
  // Validates fiber degrees (2, 1, 0) and the parity demands: components
  // even for an even structure, odd for an odd one (f must vanish in the
  // even case). Throws DomainError.
  static JacobiTriple make(const ChartPtr& base, Parity structure_parity,
                           SuperPolynomial lambda, SuperPolynomial gamma,
                           SuperPolynomial f);

  const ChartPtr& base() const { return base_; }
  // multivector carrier: cotangent lift of the base
  const BracketCarrier& carrier() const { return carrier_; }
  Parity structure_parity() const { return parity_; }
  const SuperPolynomial& lambda() const { return lambda_; }
  const SuperPolynomial& gamma() const { return gamma_; }
  const SuperPolynomial& f() const { return f_; }

 private:
  JacobiTriple(ChartPtr base, BracketCarrier carrier, Parity p,
               SuperPolynomial l, SuperPolynomial g, SuperPolynomial f)
      : base_(std::move(base)),
        carrier_(std::move(carrier)),
        parity_(p),
        lambda_(std::move(l)),
        gamma_(std::move(g)),
        f_(std::move(f)) {}

  ChartPtr base_;
  BracketCarrier carrier_;
  Parity parity_;
  SuperPolynomial lambda_, gamma_, f_;
};

struct JacobiReport {
  bool pass = false;
  // residual polynomials, one per condition, in order
  std::vector<std::pair<std::string, SuperPolynomial>> residuals;
};

// Structure conditions via the (symmetric) Schouten bracket on the
// multivector carrier. Even: {L,L} = 2 G.L and {G,L} = 0. Odd: {L,L} =
// 2 G L, {G,L} = 2 f L, {G,G} = 2(f G - {f,L}), G(f) = 0.
JacobiReport check_jacobi(const JacobiTriple& j);

struct Poissonization {
  SuperPolynomial hamiltonian;  // on the lifted extended chart
  BracketCarrier carrier;
  ChartPtr extended;  // base with t adjoined
};

// The degree -1 tensor (1/t) L + G p_t + t f p_t p_t on the extended
// chart (the p_t p_t term only survives for odd structures).
Poissonization poissonize(const JacobiTriple& j);

// {F, G}_j = derived bracket of tF, tG under the poissonization, divided
// by t. F and G are basic (no t). The result is always basic; a retained
// t signals an engine bug and raises InternalError.
SuperPolynomial jacobi_bracket(const JacobiTriple& j, const SuperPolynomial& f,
                               const SuperPolynomial& g);

struct AxiomReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> violations;  // first few failures, described
};

// Randomized exact verification of the bracket axioms (parity rule,
// graded antisymmetry, graded Jacobi, generalized Leibniz with the {.,1}
// correction) on `samples` seeded polynomial triples of bounded degree.
AxiomReport verify_jacobi_axioms(const JacobiTriple& j, uint64_t seed,
                                 long samples, long max_degree = 2);

// Caches the poissonization for repeated bracket evaluation.
class JacobiBracket {
 public:
  explicit JacobiBracket(const JacobiTriple& j);
  SuperPolynomial operator()(const SuperPolynomial& f,
                             const SuperPolynomial& g) const;
  const Poissonization& poissonization() const { return p_; }

 private:
  ChartPtr base_;
  Poissonization p_;
};

}  // namespace gcalc

#endif
