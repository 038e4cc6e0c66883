#include "gcalc/wade.hpp"

#include "gcalc/errors.hpp"

namespace gcalc {

namespace {

void check_section(const WadeSection& s) {
  if (!s.base) throw DomainError("wade section without a base chart");
  for (const auto& g : s.base->generators())
    if (g.parity == Parity::Odd || g.invertible)
      throw DomainError("wade sections live over a purely even base");
  if (s.vec.size() != s.base->size() || s.form.size() != s.base->size())
    throw DomainError("wade section component count must match the base");
}

using Vec = std::vector<SuperPolynomial>;

SuperPolynomial apply_vec(const ChartPtr& c, const Vec& x,
                          const SuperPolynomial& h) {
  SuperPolynomial out = SuperPolynomial::zero(c);
  for (uint32_t a = 0; a < c->size(); ++a)
    out = out + x[a] * h.partial_left(a);
  return out;
}

Vec lie_bracket(const ChartPtr& c, const Vec& x, const Vec& y) {
  Vec out(c->size(), SuperPolynomial::zero(c));
  for (uint32_t a = 0; a < c->size(); ++a)
    out[a] = apply_vec(c, x, y[a]) - apply_vec(c, y, x[a]);
  return out;
}

Vec lie_derivative_form(const ChartPtr& c, const Vec& x, const Vec& al) {
  Vec out(c->size(), SuperPolynomial::zero(c));
  for (uint32_t b = 0; b < c->size(); ++b) {
    SuperPolynomial s = apply_vec(c, x, al[b]);
    for (uint32_t a = 0; a < c->size(); ++a)
      s = s + al[a] * x[a].partial_left(b);
    out[b] = s;
  }
  return out;
}

Vec contract_dform(const ChartPtr& c, const Vec& x, const Vec& al) {
  // (i_X d alpha)_b = X^a (d_a alpha_b - d_b alpha_a)
  Vec out(c->size(), SuperPolynomial::zero(c));
  for (uint32_t b = 0; b < c->size(); ++b) {
    SuperPolynomial s = SuperPolynomial::zero(c);
    for (uint32_t a = 0; a < c->size(); ++a)
      s = s + x[a] * (al[b].partial_left(a) - al[a].partial_left(b));
    out[b] = s;
  }
  return out;
}

Vec gradient(const ChartPtr& c, const SuperPolynomial& f) {
  Vec out(c->size(), SuperPolynomial::zero(c));
  for (uint32_t a = 0; a < c->size(); ++a) out[a] = f.partial_left(a);
  return out;
}

SuperPolynomial contract(const ChartPtr& c, const Vec& x, const Vec& al) {
  SuperPolynomial s = SuperPolynomial::zero(c);
  for (uint32_t a = 0; a < c->size(); ++a) s = s + x[a] * al[a];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_scale(const SuperPolynomial& c, const Vec& a) {
  Vec out = a;
  for (auto& e : out) e = c * e;
  return out;
}

}  // namespace

WadeSection WadeSection::zero(const ChartPtr& base) {
  WadeSection s;
  s.base = base;
  s.vec.assign(base->size(), SuperPolynomial::zero(base));
  s.form.assign(base->size(), SuperPolynomial::zero(base));
  s.f = SuperPolynomial::zero(base);
  s.g = SuperPolynomial::zero(base);
  return s;
}

WadeSection wade_bracket(const WadeSection& u, const WadeSection& v) {
  check_section(u);
  check_section(v);
  require_same_chart(u.base, v.base);
  const ChartPtr& c = u.base;
  WadeSection out = WadeSection::zero(c);
  out.vec = lie_bracket(c, u.vec, v.vec);
  out.f = apply_vec(c, u.vec, v.f) - apply_vec(c, v.vec, u.f);
  // L_{X1} a2 - i_{X2} d a1 + f1 a2 - f2 a1 + f2 dg1 + g2 df1
  Vec form = lie_derivative_form(c, u.vec, v.form);
  form = vec_add(form, vec_scale(-SuperPolynomial::constant(c, 1),
                                 contract_dform(c, v.vec, u.form)));
  form = vec_add(form, vec_scale(u.f, v.form));
  form = vec_add(form, vec_scale(-v.f, u.form));
  form = vec_add(form, vec_scale(v.f, gradient(c, u.g)));
  form = vec_add(form, vec_scale(v.g, gradient(c, u.f)));
  out.form = std::move(form);
  // X1(g2) - X2(g1) + i_{X2} a1 + f1 g2
  out.g = apply_vec(c, u.vec, v.g) - apply_vec(c, v.vec, u.g) +
          contract(c, v.vec, u.form) + u.f * v.g;
  return out;
}

SuperPolynomial wade_pairing(const WadeSection& u, const WadeSection& v) {
  check_section(u);
  check_section(v);
  require_same_chart(u.base, v.base);
  const ChartPtr& c = u.base;
  Rational half(1, 2);
  return (contract(c, u.vec, v.form) + contract(c, v.vec, u.form) +
          u.f * v.g + v.f * u.g) *
         half;
}

SuperPolynomial wade_anchor_apply(const WadeSection& u,
                                  const SuperPolynomial& h) {
  check_section(u);
  return apply_vec(u.base, u.vec, h) + u.f * h;
}

}  // namespace gcalc
