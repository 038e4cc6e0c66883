#include "gcalc/forms.hpp"

#include <functional>

#include "gcalc/errors.hpp"

namespace gcalc {

FormSpace FormSpace::over(const ChartPtr& base) {
  FormSpace fs;
  fs.base = base;
  fs.lift = tangent_lift_chart(base, /*reverse_fiber_parity=*/true);
  return fs;
}

SuperPolynomial FormSpace::d(const SuperPolynomial& f) const {
  SuperPolynomial out = SuperPolynomial::zero(lift);
  for (uint32_t i = 0; i < base->size(); ++i) {
    SuperPolynomial du = SuperPolynomial::generator(lift, fiber_index(i));
    out = out + du * f.partial_left(i);
  }
  return out;
}

long FormSpace::form_degree(const SuperPolynomial& f) const {
  if (f.is_zero()) return 0;
  long deg = -2;
  for (const auto& [m, c] : f.terms()) {
    long d = 0;
    for (const auto& [i, e] : m.even())
      if (i >= base->size()) d += e;
    for (uint32_t i : m.odd())
      if (i >= base->size()) d += 1;
    if (deg == -2)
      deg = d;
    else if (deg != d)
      return -1;
  }
  return deg;
}

OneForm OneForm::make(const ChartPtr& chart,
                      std::vector<SuperPolynomial> coeffs, Parity parity) {
  if (coeffs.size() != chart->size())
    throw DomainError("one-form needs one coefficient per generator");
  for (auto& c : coeffs)
    if (!c.is_zero()) require_same_chart(chart, c.chart());
  OneForm a;
  a.chart = chart;
  a.coeffs = std::move(coeffs);
  a.declared_parity = parity;
  return a;
}

bool OneForm::parity_consistent() const {
  for (uint32_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    if (c.is_zero()) continue;
    GradeInfo g = c.grade();
    if (g.parity == ParityGrade::Mixed) return false;
    Parity want = chart->parity(i) + declared_parity;
    Parity have = g.parity == ParityGrade::Odd ? Parity::Odd : Parity::Even;
    if (want != have) return false;
  }
  return true;
}

SuperPolynomial OneForm::as_polynomial(const FormSpace& fs) const {
  require_same_chart(chart, fs.base);
  SuperPolynomial out = SuperPolynomial::zero(fs.lift);
  for (uint32_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    SuperPolynomial c = transport(coeffs[i], fs.lift);
    SuperPolynomial du = SuperPolynomial::generator(fs.lift, fs.fiber_index(i));
    out = out + c * du;
  }
  return out;
}

TwoForm TwoForm::from_polynomial(const FormSpace& fs, SuperPolynomial omega) {
  if (!omega.is_zero()) {
    require_same_chart(fs.lift, omega.chart());
    if (fs.form_degree(omega) != 2)
      throw DomainError("polynomial is not of fiber degree 2");
  }
  return TwoForm(fs, std::move(omega));
}

SuperPolynomial TwoForm::entry(uint32_t a, uint32_t b) const {
  SuperPolynomial w =
      omega_.partial_left(fs_.fiber_index(b)).partial_left(fs_.fiber_index(a));
  if (fs_.base->parity(a) == Parity::Odd) w = -w;
  return w;
}

bool TwoForm::is_closed() const { return fs_.d(omega_).is_zero(); }

ParityGrade TwoForm::parity() const {
  if (omega_.is_zero()) return ParityGrade::Even;
  return omega_.grade().parity;
}

TwoForm symplectize(const OneForm& alpha) {
  if (alpha.chart->distinguished_t())
    throw DomainError("chart already extended by a fiber coordinate");
  ChartPtr ext = extend_with_fiber(alpha.chart);
  FormSpace fs = FormSpace::over(ext);
  // indices shift by one: t sits in front
  SuperPolynomial a_ext = SuperPolynomial::zero(fs.lift);
  for (uint32_t i = 0; i < alpha.coeffs.size(); ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    SuperPolynomial c = transport(alpha.coeffs[i], fs.lift);
    SuperPolynomial du =
        SuperPolynomial::generator(fs.lift, fs.fiber_index(i + 1));
    a_ext = a_ext + c * du;
  }
  SuperPolynomial t = SuperPolynomial::generator(fs.lift, uint32_t(0));
  return TwoForm::from_polynomial(fs, fs.d(t * a_ext));
}

namespace {

// Raw pairing matrix W[i][j] = dL_{du_i} dL_{du_j} omega, transported to
// the base chart.
PolyMatrix pairing_matrix(const TwoForm& w) {
  const FormSpace& fs = w.space();
  const size_t n = fs.base_count();
  PolyMatrix m(n, std::vector<SuperPolynomial>(
                      n, SuperPolynomial::zero(fs.base)));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      SuperPolynomial e = w.polynomial()
                              .partial_left(fs.fiber_index(j))
                              .partial_left(fs.fiber_index(i));
      m[i][j] = transport(e, fs.base);
    }
  return m;
}

// Sign of the pairing-to-bracket rule per row: -1 for an even form
// (odd momenta), (-1)^{g_i} for an odd form (plain momenta). Calibrated
// against the canonical coordinate bracket tables of the even and odd
// normal-form symplectizations.
int bracket_rule_sign(Parity form_parity, Parity gi) {
  if (form_parity == Parity::Even) return -1;
  return gi == Parity::Odd ? -1 : 1;
}

}  // namespace

Inversion invert_two_form(const TwoForm& omega, long lift_weight) {
  Inversion out;
  ParityGrade pg = omega.parity();
  if (pg == ParityGrade::Mixed)
    throw DomainError("two-form of mixed parity cannot be inverted");
  const Parity form_parity =
      pg == ParityGrade::Odd ? Parity::Odd : Parity::Even;
  const ChartPtr base = omega.chart();
  const size_t n = base->size();
  if (n == 0) throw DomainError("empty chart");

  PolyMatrix w = pairing_matrix(omega);
  BodyInverse bd = body_matrix_inverse(base, matrix_body(w));
  out.body_det = bd.det;
  auto xinv = super_matrix_inverse(base, w);
  if (!xinv) return out;  // degenerate

  const bool reverse = form_parity == Parity::Even;
  ChartPtr carrier_chart = cotangent_lift_chart(base, lift_weight, reverse);
  BracketCarrier carrier = BracketCarrier::on(carrier_chart);

  PolyMatrix b(n, std::vector<SuperPolynomial>(
                      n, SuperPolynomial::zero(carrier_chart)));
  for (uint32_t i = 0; i < n; ++i) {
    int s = bracket_rule_sign(form_parity, base->parity(i));
    for (uint32_t j = 0; j < n; ++j) {
      SuperPolynomial e = transport((*xinv)[i][j], carrier_chart);
      b[i][j] = s < 0 ? -e : e;
    }
  }
  out.hamiltonian = hamiltonian_from_bracket_matrix(carrier, b);
  out.carrier = carrier;
  out.nondegenerate = true;
  return out;
}

TwoForm tensor_to_form(const BracketCarrier& carrier,
                       const SuperPolynomial& hamiltonian) {
  const ChartPtr cchart = carrier.chart();
  const size_t n = carrier.pairs().size();
  // base chart of the carrier = chart of the pair bases
  std::vector<Generator> base_gens;
  for (const auto& pr : carrier.pairs()) {
    Generator g = cchart->gen(pr.base);
    Weight w(g.weight.begin() + 1, g.weight.end());
    g.weight = std::move(w);
    base_gens.push_back(std::move(g));
  }
  std::optional<uint32_t> t_marker;
  if (cchart->distinguished_t()) {
    for (uint32_t i = 0; i < carrier.pairs().size(); ++i)
      if (carrier.pairs()[i].base == *cchart->distinguished_t()) t_marker = i;
  }
  ChartPtr base = Chart::make(std::move(base_gens),
                              cchart->grading_dim() - 1, t_marker);
  // reversed momenta (odd canonical bracket) carry an even form and
  // conversely
  const Parity form_parity = carrier.bracket_parity() == Parity::Odd
                                 ? Parity::Even
                                 : Parity::Odd;

  PolyMatrix b = bracket_matrix(carrier, hamiltonian);
  PolyMatrix x(n, std::vector<SuperPolynomial>(
                      n, SuperPolynomial::zero(base)));
  for (uint32_t i = 0; i < n; ++i) {
    int s = bracket_rule_sign(form_parity, base->parity(i));
    for (uint32_t j = 0; j < n; ++j) {
      SuperPolynomial e = transport(b[i][j], base);  // must be basic
      x[i][j] = s < 0 ? -e : e;
    }
  }
  auto w = super_matrix_inverse(base, x);
  if (!w)
    throw DomainError("Hamiltonian is degenerate; no two-form inverse");

  FormSpace fs = FormSpace::over(base);
  SuperPolynomial omega = SuperPolynomial::zero(fs.lift);
  auto extract = [&](const SuperPolynomial& om, uint32_t i, uint32_t j) {
    return om.partial_left(fs.fiber_index(j)).partial_left(fs.fiber_index(i));
  };
  auto half = Rational(1, 2);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) {
      SuperPolynomial r = transport((*w)[i][j], fs.lift) -
                          transport(extract(omega, i, j), fs.lift);
      if (r.is_zero()) continue;
      SuperPolynomial dui =
          SuperPolynomial::generator(fs.lift, fs.fiber_index(i));
      SuperPolynomial duj =
          SuperPolynomial::generator(fs.lift, fs.fiber_index(j));
      SuperPolynomial r_even = (r + r.parity_map()) * half;
      SuperPolynomial r_odd = (r - r.parity_map()) * half;
      for (const SuperPolynomial* piece : {&r_even, &r_odd}) {
        if (piece->is_zero()) continue;
        SuperPolynomial cand = dui * (*piece) * duj;
        SuperPolynomial got = extract(cand, i, j);
        if (got.is_zero())
          throw DomainError("pairing matrix not realizable as a two-form");
        const auto& [gm, gc] = *got.terms().begin();
        Rational pcf = piece->coefficient(gm);
        if (pcf == 0)
          throw DomainError("pairing matrix not realizable as a two-form");
        Rational s = pcf / gc;
        if (got * s != *piece)
          throw DomainError("pairing matrix not realizable as a two-form");
        omega = omega + cand * s;
      }
    }
  }
  // verify the full matrix, catching inconsistent symmetry parts
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (extract(omega, i, j) != transport((*w)[i][j], fs.lift))
        throw DomainError(
            "Hamiltonian is not the Poisson tensor of any two-form");
  return TwoForm::from_polynomial(fs, omega);
}

bool check_contact(const OneForm& alpha) {
  if (!alpha.parity_consistent()) return false;
  TwoForm omega = symplectize(alpha);
  if (!omega.is_closed())
    throw InternalError("symplectization is not closed");
  Inversion inv = invert_two_form(omega);
  return inv.nondegenerate;
}

PolyMatrix symplectization_bracket_table(const OneForm& alpha) {
  TwoForm omega = symplectize(alpha);
  Inversion inv = invert_two_form(omega);
  if (!inv.nondegenerate)
    throw PreconditionError("one-form is not contact");
  PolyMatrix b = bracket_matrix(*inv.carrier, inv.hamiltonian);
  PolyMatrix out(b.size(), std::vector<SuperPolynomial>(
                               b.size(), SuperPolynomial::zero(omega.chart())));
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i][j] = transport(b[i][j], omega.chart());
  return out;
}

LegendreBracket::LegendreBracket(const OneForm& alpha) : base_(alpha.chart) {
  if (!check_contact(alpha))
    throw PreconditionError("legendre_bracket requires a contact form");
  inv_ = invert_two_form(symplectize(alpha));
}

SuperPolynomial LegendreBracket::operator()(const SuperPolynomial& f,
                                            const SuperPolynomial& g) const {
  const ChartPtr cc = inv_.carrier->chart();
  SuperPolynomial t = SuperPolynomial::generator(cc, "t");
  SuperPolynomial tf = t * transport(f, cc);
  SuperPolynomial tg = t * transport(g, cc);
  SuperPolynomial br = derived_bracket(*inv_.carrier, inv_.hamiltonian, tf, tg);
  SuperPolynomial res = br * t.unit_inverse();
  if (res.degree_in(cc->index_of("t")) != 0)
    throw InternalError("Legendre bracket retained the fiber coordinate");
  return transport(res, base_);
}

SuperPolynomial legendre_bracket(const OneForm& alpha,
                                 const SuperPolynomial& f,
                                 const SuperPolynomial& g) {
  return LegendreBracket(alpha)(f, g);
}

}  // namespace gcalc
