#include "gcalc/jacobi.hpp"

#include "gcalc/errors.hpp"
#include "gcalc/sampler.hpp"

namespace gcalc {

namespace {

// degree in the momentum generators (second half of a cotangent lift)
long fiber_degree(size_t base_count,
                  const SuperPolynomial& p) {
  if (p.is_zero()) return 0;
  long deg = -2;
  for (const auto& [m, c] : p.terms()) {
    long d = 0;
    for (const auto& [i, e] : m.even())
      if (i >= base_count) d += e;
    for (uint32_t i : m.odd())
      if (i >= base_count) d += 1;
    if (deg == -2)
      deg = d;
    else if (deg != d)
      return -1;
  }
  return deg;
}

void require_parity(const SuperPolynomial& p, Parity want, const char* who) {
  if (p.is_zero()) return;
  GradeInfo g = p.grade();
  ParityGrade w =
      want == Parity::Odd ? ParityGrade::Odd : ParityGrade::Even;
  if (g.parity != w)
    throw DomainError(std::string(who) +
                      " has the wrong parity for this structure");
}

}  // namespace

JacobiTriple JacobiTriple::make(const ChartPtr& base, Parity structure_parity,
                                SuperPolynomial lambda, SuperPolynomial gamma,
                                SuperPolynomial f) {
  const bool reverse = structure_parity == Parity::Even;
  ChartPtr lifted = cotangent_lift_chart(base, 1, reverse);
  BracketCarrier carrier = BracketCarrier::on(lifted);
  auto fix = [&](SuperPolynomial& p) {
    if (!p.is_zero()) p = transport(p, lifted);
  };
  fix(lambda);
  fix(gamma);
  fix(f);
  if (!lambda.is_zero() && fiber_degree(base->size(), lambda) != 2)
    throw DomainError("Lambda must have fiber degree 2");
  if (!gamma.is_zero() && fiber_degree(base->size(), gamma) != 1)
    throw DomainError("Gamma must have fiber degree 1");
  if (!f.is_zero() && fiber_degree(base->size(), f) != 0)
    throw DomainError("f must have fiber degree 0");
  require_parity(lambda, structure_parity, "Lambda");
  require_parity(gamma, structure_parity, "Gamma");
  if (structure_parity == Parity::Even) {
    if (!f.is_zero())
      throw DomainError("even Jacobi structures carry no f component");
  } else {
    require_parity(f, structure_parity, "f");
  }
  return JacobiTriple(base, std::move(carrier), structure_parity,
                      std::move(lambda), std::move(gamma), std::move(f));
}

JacobiReport check_jacobi(const JacobiTriple& j) {
  const BracketCarrier& b = j.carrier();
  const SuperPolynomial &L = j.lambda(), &G = j.gamma(), &f = j.f();
  const Rational two(2);
  JacobiReport rep;
  if (j.structure_parity() == Parity::Even) {
    rep.residuals.emplace_back("{Lambda,Lambda} - 2*Gamma*Lambda",
                               canonical_bracket(b, L, L) - two * (G * L));
    rep.residuals.emplace_back("{Gamma,Lambda}", canonical_bracket(b, G, L));
  } else {
    rep.residuals.emplace_back("{Lambda,Lambda} - 2*Gamma*Lambda",
                               canonical_bracket(b, L, L) - two * (G * L));
    rep.residuals.emplace_back("{Gamma,Lambda} - 2*f*Lambda",
                               canonical_bracket(b, G, L) - two * (f * L));
    rep.residuals.emplace_back(
        "{Gamma,Gamma} - 2*(f*Gamma - {f,Lambda})",
        canonical_bracket(b, G, G) -
            two * (f * G - canonical_bracket(b, f, L)));
    rep.residuals.emplace_back("Gamma(f)", canonical_bracket(b, G, f));
  }
  rep.pass = true;
  for (const auto& [name, r] : rep.residuals)
    if (!r.is_zero()) rep.pass = false;
  return rep;
}

Poissonization poissonize(const JacobiTriple& j) {
  const bool reverse = j.structure_parity() == Parity::Even;
  ChartPtr ext = extend_with_fiber(j.base());
  ChartPtr lifted = cotangent_lift_chart(ext, 1, reverse);
  BracketCarrier carrier = BracketCarrier::on(lifted);
  SuperPolynomial t = SuperPolynomial::generator(lifted, "t");
  SuperPolynomial pt = SuperPolynomial::generator(lifted, "p_t");
  SuperPolynomial h = SuperPolynomial::zero(lifted);
  if (!j.lambda().is_zero())
    h = h + t.unit_inverse() * transport(j.lambda(), lifted);
  if (!j.gamma().is_zero()) h = h + transport(j.gamma(), lifted) * pt;
  if (!j.f().is_zero()) h = h + t * transport(j.f(), lifted) * pt * pt;
  return Poissonization{std::move(h), std::move(carrier), std::move(ext)};
}

JacobiBracket::JacobiBracket(const JacobiTriple& j)
    : base_(j.base()), p_(poissonize(j)) {}

SuperPolynomial JacobiBracket::operator()(const SuperPolynomial& f,
                                          const SuperPolynomial& g) const {
  const ChartPtr& cc = p_.carrier.chart();
  SuperPolynomial t = SuperPolynomial::generator(cc, "t");
  SuperPolynomial tf = t * transport(f, cc);
  SuperPolynomial tg = t * transport(g, cc);
  SuperPolynomial br =
      derived_bracket(p_.carrier, p_.hamiltonian, tf, tg);
  SuperPolynomial res = br * t.unit_inverse();
  if (res.degree_in(cc->index_of("t")) != 0)
    throw InternalError("Jacobi bracket retained the fiber coordinate");
  return transport(res, base_);
}

SuperPolynomial jacobi_bracket(const JacobiTriple& j, const SuperPolynomial& f,
                               const SuperPolynomial& g) {
  return JacobiBracket(j)(f, g);
}

AxiomReport verify_jacobi_axioms(const JacobiTriple& j, uint64_t seed,
                                 long samples, long max_degree) {
  AxiomReport rep;
  JacobiBracket br(j);
  const ChartPtr& c = j.base();
  const int k = int(j.structure_parity());
  Sampler s(seed);
  auto note = [&](const char* what) {
    rep.pass = false;
    if (rep.violations.size() < 8) rep.violations.push_back(what);
  };
  for (long it = 0; it < samples; ++it) {
    Parity pf = (s.next() & 1) ? Parity::Odd : Parity::Even;
    Parity pg = (s.next() & 1) ? Parity::Odd : Parity::Even;
    SuperPolynomial f = s.parity_homogeneous(c, max_degree, 3, pf);
    SuperPolynomial g = s.parity_homogeneous(c, max_degree, 3, pg);
    SuperPolynomial e = s.polynomial(c, max_degree, 3);
    const int gf = int(pf), gg = int(pg);
    ++rep.checked;

    SuperPolynomial bfg = br(f, g);
    if (!bfg.is_zero()) {
      GradeInfo gi = bfg.grade();
      if (gi.parity == ParityGrade::Mixed ||
          int(gi.parity == ParityGrade::Odd) != (gf + gg + k) % 2)
        note("parity rule");
    }
    SuperPolynomial anti = br(g, f);
    if (((gf + k) * (gg + k)) % 2 == 0) anti = -anti;
    if (bfg != anti) note("graded antisymmetry");

    SuperPolynomial jac = br(f, br(g, e)) - br(bfg, e);
    SuperPolynomial last = br(g, br(f, e));
    jac = (((gf + k) * (gg + k)) % 2 == 0) ? jac - last : jac + last;
    if (!jac.is_zero()) note("graded Jacobi identity");

    SuperPolynomial one = SuperPolynomial::constant(c, 1);
    SuperPolynomial lhs = br(f, g * e);
    SuperPolynomial rhs = bfg * e;
    SuperPolynomial cross = g * br(f, e);
    rhs = (((gf + k) * gg) % 2 == 0) ? rhs + cross : rhs - cross;
    rhs = rhs - br(f, one) * g * e;
    if (lhs != rhs) note("generalized Leibniz rule");
  }
  return rep;
}

}  // namespace gcalc
