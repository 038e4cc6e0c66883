#include "gcalc/courant.hpp"

#include "gcalc/errors.hpp"
#include "gcalc/matrix.hpp"

namespace gcalc {

namespace {

std::string idx_name(const char* stem, size_t i) {
  return std::string(stem) + std::to_string(i + 1);
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      Rational f = m[i][col] / m[col][col];
      for (size_t jj = col; jj < n; ++jj) m[i][jj] -= f * m[col][jj];
    }
  }
  return det;
}

}  // namespace

CourantSpec CourantSpec::zero(size_t m, size_t q,
                              std::vector<std::vector<Rational>> g) {
  CourantSpec s;
  s.m = m;
  s.q = q;
  std::vector<Generator> gens;
  for (size_t a = 0; a < m; ++a)
    gens.push_back({idx_name("x", a), Parity::Even, {0}, false});
  s.base = Chart::make(std::move(gens), 1);
  s.g = std::move(g);
  SuperPolynomial z = SuperPolynomial::zero(s.base);
  s.r_coef.assign(q, std::vector<SuperPolynomial>(m, z));
  s.r_scalar.assign(q, z);
  s.a.assign(q, std::vector<std::vector<SuperPolynomial>>(
                    q, std::vector<SuperPolynomial>(q, z)));
  return s;
}

void CourantSpec::validate() const {
  if (!base || base->size() != m)
    throw DomainError("courant base chart does not match m");
  if (g.size() != q) throw DomainError("g must be q x q");
  for (const auto& row : g)
    if (row.size() != q) throw DomainError("g must be q x q");
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      if (g[i][j] != g[j][i]) throw DomainError("g must be symmetric");
  if (q && rational_det(g) == 0)
    throw DomainError("g must be invertible");
  if (r_coef.size() != q || r_scalar.size() != q || a.size() != q)
    throw DomainError("structure arrays must have length q");
  for (const auto& row : r_coef)
    if (row.size() != m) throw DomainError("r_coef must be q x m");
  for (size_t i = 0; i < q; ++i) {
    if (a[i].size() != q) throw DomainError("A must be q x q x q");
    for (size_t j = 0; j < q; ++j) {
      if (a[i][j].size() != q) throw DomainError("A must be q x q x q");
      for (size_t k = 0; k < q; ++k) {
        if (a[i][j][k] != -a[j][i][k] || a[i][j][k] != -a[i][k][j])
          throw DomainError("A must be totally antisymmetric");
      }
    }
  }
}

SuperPolynomial CourantModel::poisson(const SuperPolynomial& f,
                                      const SuperPolynomial& g) const {
  const ChartPtr& cc = carrier.chart();
  SuperPolynomial r =
      derived_bracket(carrier, tensor, transport(f, cc), transport(g, cc));
  return transport(r, chart);
}

SuperPolynomial CourantModel::dorfman(const SuperPolynomial& f,
                                      const SuperPolynomial& g) const {
  return poisson(poisson(f, cubic), g);
}

SuperPolynomial CourantModel::section(size_t i) const {
  SuperPolynomial t = SuperPolynomial::generator(chart, "t");
  SuperPolynomial s = SuperPolynomial::zero(chart);
  for (size_t j = 0; j < spec.q; ++j)
    s = s + SuperPolynomial::generator(chart, idx_name("th", j)) *
                spec.g[i][j];
  return t * s;
}

SuperPolynomial CourantModel::anchor(const SuperPolynomial& u,
                                     const SuperPolynomial& f) const {
  return poisson(poisson(u, cubic), f);
}

SuperPolynomial CourantModel::derivation(const SuperPolynomial& f) const {
  SuperPolynomial d = SuperPolynomial::zero(chart);
  for (size_t k = 0; k < spec.q; ++k) {
    SuperPolynomial c = transport(anchor(section(k), f), chart);
    d = d + c * SuperPolynomial::generator(chart, idx_name("th", k));
  }
  return d;
}

CourantModel build_chart_and_hamiltonian(const CourantSpec& s) {
  s.validate();
  std::vector<Generator> gens;
  gens.push_back({"t", Parity::Even, {0}, true});
  for (size_t a = 0; a < s.m; ++a)
    gens.push_back({idx_name("x", a), Parity::Even, {0}, false});
  for (size_t i = 0; i < s.q; ++i)
    gens.push_back({idx_name("th", i), Parity::Odd, {1}, false});
  gens.push_back({"z", Parity::Even, {2}, false});
  for (size_t a = 0; a < s.m; ++a)
    gens.push_back({idx_name("p", a), Parity::Even, {2}, false});
  ChartPtr chart = Chart::make(std::move(gens), 1, uint32_t(0));

  FormSpace fs = FormSpace::over(chart);
  auto dgen = [&](const std::string& n) {
    return SuperPolynomial::generator(fs.lift, "d" + n);
  };
  SuperPolynomial omega = dgen("t") * dgen("z");
  for (size_t a = 0; a < s.m; ++a)
    omega = omega + dgen(idx_name("x", a)) * dgen(idx_name("p", a));
  // theta block of the closed weight-2 form: the bare t factor needs the
  // dt theta dtheta cross term for d(omega) = 0
  SuperPolynomial t_lift = SuperPolynomial::generator(fs.lift, "t");
  for (size_t i = 0; i < s.q; ++i)
    for (size_t j = 0; j < s.q; ++j) {
      Rational gij2 = s.g[i][j] / 2;
      omega = omega - t_lift * gij2 * dgen(idx_name("th", i)) *
                          dgen(idx_name("th", j));
      omega = omega +
              SuperPolynomial::generator(fs.lift, idx_name("th", i)) * gij2 *
                  dgen("t") * dgen(idx_name("th", j));
    }
  TwoForm w = TwoForm::from_polynomial(fs, omega);
  if (!w.is_closed())
    throw InternalError("courant model form must be closed");
  Inversion inv = invert_two_form(w, 2);
  if (!inv.nondegenerate)
    throw DomainError("courant symplectic form is degenerate");

  SuperPolynomial h = SuperPolynomial::zero(chart);
  SuperPolynomial t = SuperPolynomial::generator(chart, "t");
  SuperPolynomial z = SuperPolynomial::generator(chart, "z");
  for (size_t i = 0; i < s.q; ++i) {
    SuperPolynomial anchor_i = SuperPolynomial::zero(chart);
    for (size_t a = 0; a < s.m; ++a)
      anchor_i = anchor_i + transport(s.r_coef[i][a], chart) *
                                SuperPolynomial::generator(chart,
                                                           idx_name("p", a));
    anchor_i = anchor_i + transport(s.r_scalar[i], chart) * t * z;
    h = h + SuperPolynomial::generator(chart, idx_name("th", i)) * anchor_i;
  }
  SuperPolynomial cubic_a = SuperPolynomial::zero(chart);
  for (size_t i = 0; i < s.q; ++i)
    for (size_t j = 0; j < s.q; ++j)
      for (size_t k = 0; k < s.q; ++k) {
        if (s.a[i][j][k].is_zero()) continue;
        cubic_a = cubic_a + transport(s.a[i][j][k], chart) *
                                SuperPolynomial::generator(chart,
                                                           idx_name("th", i)) *
                                SuperPolynomial::generator(chart,
                                                           idx_name("th", j)) *
                                SuperPolynomial::generator(chart,
                                                           idx_name("th", k));
      }
  h = h - t * cubic_a * Rational(1, 6);

  return CourantModel{s,
                      chart,
                      std::move(w),
                      inv.hamiltonian,
                      *inv.carrier,
                      std::move(h)};
}

MasterReport check_master_equation(const CourantModel& model) {
  MasterReport r;
  r.residual = model.poisson(model.cubic, model.cubic);
  r.pass = r.residual.is_zero();
  return r;
}

CourantData courant_data(const CourantModel& model, bool require_master) {
  CourantData out;
  out.master = check_master_equation(model);
  if (!out.master.pass && require_master)
    throw PreconditionError(
        "courant_data requires a passing master equation");
  const size_t q = model.spec.q;
  const size_t m = model.spec.m;
  const ChartPtr& chart = model.chart;
  SuperPolynomial t = SuperPolynomial::generator(chart, "t");
  SuperPolynomial tinv = t.unit_inverse();

  std::vector<SuperPolynomial> e;
  for (size_t i = 0; i < q; ++i) e.push_back(model.section(i));

  out.pairing.assign(q, {});
  out.g_recovered.assign(q, std::vector<Rational>(q, 0));
  out.bracket.assign(q, {});
  out.triple.assign(q, std::vector<std::vector<SuperPolynomial>>(q));
  auto& res = out.axiom_residuals;
  for (size_t i = 0; i < q; ++i) {
    for (size_t j = 0; j < q; ++j) {
      SuperPolynomial pij = transport(model.poisson(e[i], e[j]), chart);
      out.g_recovered[i][j] = (pij * tinv).coefficient(Monomial{});
      res.emplace_back("pairing(" + std::to_string(i) + "," +
                           std::to_string(j) + ") - t*g",
                       pij - t * out.g_recovered[i][j]);
      out.pairing[i].push_back(std::move(pij));
      out.bracket[i].push_back(
          transport(model.dorfman(e[i], e[j]), chart));
    }
  }
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      for (size_t k = 0; k < q; ++k)
        out.triple[i][j].push_back(
            transport(model.poisson(out.bracket[i][j], e[k]), chart));

  // anchor recovery
  out.r_coef_recovered.assign(q, {});
  out.r_scalar_recovered.clear();
  out.a_recovered.assign(
      q, std::vector<std::vector<SuperPolynomial>>(
             q, std::vector<SuperPolynomial>(
                    q, SuperPolynomial::zero(model.spec.base))));
  for (size_t i = 0; i < q; ++i) {
    for (size_t a = 0; a < m; ++a) {
      SuperPolynomial xa = SuperPolynomial::generator(chart, "x" +
                                                                 std::to_string(a + 1));
      out.r_coef_recovered[i].push_back(
          transport(model.anchor(e[i], xa), model.spec.base));
    }
    SuperPolynomial rt = model.anchor(e[i], t);
    out.r_scalar_recovered.push_back(
        transport(transport(rt, chart) * tinv, model.spec.base));
  }
  // the symmetric part of the bracket table carries the derivation term
  // g_ij rs_k; removing it inverts the dictionary exactly
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      for (size_t k = 0; k < q; ++k) {
        SuperPolynomial corr =
            out.r_scalar_recovered[k] * Rational(model.spec.g[i][j]) +
            out.r_scalar_recovered[i] * Rational(model.spec.g[j][k]) -
            out.r_scalar_recovered[j] * Rational(model.spec.g[i][k]);
        out.a_recovered[i][j][k] =
            transport(out.triple[i][j][k] * tinv, model.spec.base) -
            corr * Rational(1, 2);
      }

  // structure axioms as exact residuals
  auto nm = [](const char* eq, size_t i, size_t j, long k = -1) {
    std::string s = std::string(eq) + "[" + std::to_string(i) + "," +
                    std::to_string(j);
    if (k >= 0) s += "," + std::to_string(k);
    return s + "]";
  };
  for (size_t i = 0; i < q; ++i) {
    for (size_t j = 0; j < q; ++j) {
      res.emplace_back(
          nm("pairing-bracket", i, j),
          transport(model.poisson(out.bracket[i][j], e[j]), chart) -
              transport(model.poisson(e[i], out.bracket[j][j]), chart));
      res.emplace_back(
          nm("anchor-pairing", i, j),
          transport(model.anchor(e[i], out.pairing[j][j]), chart) -
              Rational(2) *
                  transport(model.poisson(out.bracket[i][j], e[j]), chart));
      res.emplace_back(nm("symmetrized-bracket", i, j),
                       out.bracket[i][j] + out.bracket[j][i] -
                           model.derivation(out.pairing[i][j]));
      for (size_t k = 0; k < q; ++k) {
        res.emplace_back(nm("polarized-anchor", i, j, long(k)),
                         transport(model.anchor(e[i], out.pairing[j][k]),
                                   chart) -
                             out.triple[i][j][k] - out.triple[i][k][j]);
        res.emplace_back(
            nm("polarized-pairing", i, j, long(k)),
            transport(model.anchor(e[i], out.pairing[j][k]), chart) -
                transport(model.poisson(e[i], out.bracket[j][k] +
                                                  out.bracket[k][j]),
                          chart));
        res.emplace_back(
            nm("skew-symmetrized", i, j, long(k)),
            transport(model.anchor(e[k], out.pairing[i][j]), chart) -
                out.triple[i][j][k] - out.triple[j][i][k]);
      }
    }
  }
  // Leibniz rules and the operator homomorphism on sampled basic functions
  std::vector<SuperPolynomial> fx;
  fx.push_back(SuperPolynomial::constant(chart, 1));
  for (size_t a = 0; a < m; ++a) {
    SuperPolynomial xa =
        SuperPolynomial::generator(chart, "x" + std::to_string(a + 1));
    fx.push_back(xa);
    fx.push_back(xa * xa);
  }
  std::vector<SuperPolynomial> ftx = fx;
  ftx.push_back(t);
  if (m > 0)
    ftx.push_back(t * SuperPolynomial::generator(chart, "x1"));
  for (size_t i = 0; i < q; ++i) {
    for (size_t j = 0; j < q; ++j) {
      for (size_t fi = 0; fi < fx.size(); ++fi) {
        const SuperPolynomial& f = fx[fi];
        res.emplace_back(
            nm("leibniz-right", i, j, long(fi)),
            transport(model.dorfman(e[i], f * e[j]), chart) -
                f * out.bracket[i][j] -
                transport(model.anchor(e[i], f), chart) * e[j]);
        res.emplace_back(
            nm("leibniz-left", i, j, long(fi)),
            transport(model.dorfman(f * e[i], e[j]), chart) -
                f * out.bracket[i][j] +
                transport(model.anchor(e[j], f), chart) * e[i] -
                out.pairing[i][j] * model.derivation(f));
      }
      for (size_t fi = 0; fi < ftx.size(); ++fi) {
        const SuperPolynomial& f = ftx[fi];
        res.emplace_back(
            nm("anchor-homomorphism", i, j, long(fi)),
            transport(model.anchor(out.bracket[i][j], f), chart) -
                transport(model.anchor(e[i],
                                       transport(model.anchor(e[j], f),
                                                 chart)),
                          chart) +
                transport(model.anchor(e[j],
                                       transport(model.anchor(e[i], f),
                                                 chart)),
                          chart));
      }
    }
  }
  out.axioms_pass = true;
  for (const auto& [name, r] : res)
    if (!r.is_zero()) out.axioms_pass = false;
  return out;
}

}  // namespace gcalc
