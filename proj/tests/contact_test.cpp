#include <doctest.h>

#include "gcalc/errors.hpp"
#include "gcalc/forms.hpp"
#include "gcalc/sampler.hpp"
#include "test_util.hpp"

using namespace gcalc;
using namespace gcalc_test;

namespace {

// direct coordinate formula for the Legendre bracket of the even normal
// form; independent of the symplectize/invert pipeline
SuperPolynomial legendre_even_formula(const ChartPtr& c, size_t pairs,
                                      const std::vector<int>& eps,
                                      const SuperPolynomial& f,
                                      const SuperPolynomial& g) {
  SuperPolynomial out = SuperPolynomial::zero(c);
  uint32_t z = c->index_of("z");
  for (size_t a = 0; a < pairs; ++a) {
    uint32_t x = c->index_of("x" + std::to_string(a + 1));
    uint32_t p = c->index_of("p" + std::to_string(a + 1));
    SuperPolynomial pg = SuperPolynomial::generator(c, p);
    out = out + f.partial_right(p) * (pg * g.partial_left(z) +
                                      g.partial_left(x));
    out = out - f.partial_right(x) * g.partial_left(p);
    out = out - f.partial_right(z) * (pg * g.partial_left(p));
  }
  Rational half(1, 2);
  for (size_t j = 0; j < eps.size(); ++j) {
    uint32_t th = c->index_of("th" + std::to_string(j + 1));
    SuperPolynomial thg = SuperPolynomial::generator(c, th);
    out = out + f.partial_right(th) *
                    (thg * half * g.partial_left(z) +
                     g.partial_left(th) * Rational(eps[j]));
    out = out - f.partial_right(z) * (thg * half * g.partial_left(th));
  }
  out = out + f.partial_right(z) * g - f * g.partial_left(z);
  return out;
}

// odd normal form companion
SuperPolynomial legendre_odd_formula(const ChartPtr& c, size_t pairs,
                                     const SuperPolynomial& f,
                                     const SuperPolynomial& g) {
  SuperPolynomial out = SuperPolynomial::zero(c);
  uint32_t xi = c->index_of("xi");
  for (size_t a = 0; a < pairs; ++a) {
    uint32_t x = c->index_of("x" + std::to_string(a + 1));
    uint32_t th = c->index_of("th" + std::to_string(a + 1));
    SuperPolynomial thg = SuperPolynomial::generator(c, th);
    out = out - f.partial_right(x) * g.partial_left(th);
    out = out + f.partial_right(th) * g.partial_left(x);
    out = out - f.partial_right(th) * (thg * g.partial_left(xi));
    out = out + f.partial_right(xi) * (thg * g.partial_left(th));
  }
  out = out + f * g.partial_left(xi) - f.partial_right(xi) * g;
  return out;
}

}  // namespace

TEST_CASE("symplectization of the trivial-bundle form") {
  auto m = Chart::make({{"z", Parity::Even, {0}, false},
                        {"x", Parity::Even, {0}, false},
                        {"p", Parity::Even, {0}, false}},
                       1);
  OneForm alpha = OneForm::make(
      m,
      {SuperPolynomial::constant(m, 1), -SuperPolynomial::generator(m, "p"),
       SuperPolynomial::zero(m)},
      Parity::Even);
  TwoForm w = symplectize(alpha);
  auto L = w.space().lift;
  SuperPolynomial expect = make_term(L, 1, {{"dt", 1}, {"dz", 1}}) +
                           make_term(L, -1, {{"p", 1}, {"dt", 1}, {"dx", 1}}) +
                           make_term(L, -1, {{"t", 1}, {"dp", 1}, {"dx", 1}});
  CHECK(w.polynomial() == expect);
  CHECK(w.is_closed());
  CHECK(w.parity() == ParityGrade::Even);
}

TEST_CASE("symplectization of a single even coordinate") {
  auto m = Chart::make({{"x", Parity::Even, {0}, false}}, 1);
  OneForm alpha =
      OneForm::make(m, {SuperPolynomial::constant(m, 1)}, Parity::Even);
  TwoForm w = symplectize(alpha);
  CHECK(w.polynomial() ==
        make_term(w.space().lift, 1, {{"dt", 1}, {"dx", 1}}));
}

TEST_CASE("two-form entry symmetry rule") {
  OneForm alpha = even_normal_form(1, {1});
  TwoForm w = symplectize(alpha);
  const ChartPtr& c = w.chart();
  for (uint32_t a = 0; a < c->size(); ++a)
    for (uint32_t b = 0; b < c->size(); ++b) {
      int s = (uint8_t(c->parity(a)) & uint8_t(c->parity(b))) ? 1 : -1;
      CHECK(w.entry(a, b) == w.entry(b, a) * Rational(s));
    }
}

TEST_CASE("inversion of constant blocks") {
  auto m = Chart::make({{"x", Parity::Even, {0}, false},
                        {"p", Parity::Even, {0}, false}},
                       1);
  FormSpace fs = FormSpace::over(m);
  // orientation fixed by the normal-form bracket tables: the base-first
  // polynomial dx dp inverts to the tensor whose derived bracket is the
  // calibration {p, x} = 1
  TwoForm w = TwoForm::from_polynomial(
      fs, make_term(fs.lift, 1, {{"dx", 1}, {"dp", 1}}));
  Inversion inv = invert_two_form(w);
  REQUIRE(inv.nondegenerate);
  auto cc = inv.carrier->chart();
  SuperPolynomial dxdp = SuperPolynomial::generator(cc, "p_x") *
                         SuperPolynomial::generator(cc, "p_p");
  CHECK(inv.hamiltonian == dxdp);
  auto b = *inv.carrier;
  CHECK(derived_bracket(b, inv.hamiltonian,
                        SuperPolynomial::generator(cc, "p"),
                        SuperPolynomial::generator(cc, "x")) ==
        SuperPolynomial::constant(cc, 1));
  // the reversed orientation inverts to the opposite tensor
  TwoForm wr = TwoForm::from_polynomial(
      fs, make_term(fs.lift, 1, {{"dp", 1}, {"dx", 1}}));
  CHECK(invert_two_form(wr).hamiltonian == -dxdp);
}

TEST_CASE("inversion matches the displayed tensors") {
  SUBCASE("even normal form, one pair") {
    auto m = Chart::make({{"z", Parity::Even, {0}, false},
                          {"x", Parity::Even, {0}, false},
                          {"p", Parity::Even, {0}, false}},
                         1);
    OneForm alpha = OneForm::make(
        m,
        {SuperPolynomial::constant(m, 1), -SuperPolynomial::generator(m, "p"),
         SuperPolynomial::zero(m)},
        Parity::Even);
    Inversion inv = invert_two_form(symplectize(alpha));
    REQUIRE(inv.nondegenerate);
    auto cc = inv.carrier->chart();
    auto g = [&](const char* n) { return SuperPolynomial::generator(cc, n); };
    SuperPolynomial tinv = g("t").unit_inverse();
    SuperPolynomial expect =
        g("p_t") * g("p_z") +
        tinv * (g("p_z") * g("p") * g("p_p") + g("p_x") * g("p_p"));
    CHECK(inv.hamiltonian == expect);
  }
  SUBCASE("odd normal form, one pair") {
    OneForm alpha = odd_normal_form(1);
    Inversion inv = invert_two_form(symplectize(alpha));
    REQUIRE(inv.nondegenerate);
    auto cc = inv.carrier->chart();
    auto g = [&](const char* n) { return SuperPolynomial::generator(cc, n); };
    SuperPolynomial tinv = g("t").unit_inverse();
    SuperPolynomial expect =
        -(g("p_t") * g("p_xi")) +
        tinv * (g("p_x1") * g("p_th1") -
                g("p_th1") * g("th1") * g("p_xi"));
    CHECK(inv.hamiltonian == expect);
  }
}

TEST_CASE("two-form construction validates fiber degree") {
  auto m = Chart::make({{"x", Parity::Even, {0}, false},
                        {"p", Parity::Even, {0}, false}},
                       1);
  FormSpace fs = FormSpace::over(m);
  CHECK_THROWS_AS(TwoForm::from_polynomial(
                      fs, make_term(fs.lift, 1, {{"dx", 1}})),
                  DomainError);
  CHECK_THROWS_AS(
      TwoForm::from_polynomial(
          fs, make_term(fs.lift, 1, {{"dx", 1}, {"dp", 1}}) +
                  make_term(fs.lift, 1, {{"x", 1}, {"dp", 1}})),
      DomainError);
}

TEST_CASE("degenerate two-form reports degeneracy") {
  auto m = Chart::make({{"x", Parity::Even, {0}, false},
                        {"y", Parity::Even, {0}, false}},
                       1);
  FormSpace fs = FormSpace::over(m);
  // dx dy has an invertible pairing; x dx dy vanishes at x = 0
  TwoForm w = TwoForm::from_polynomial(
      fs, make_term(fs.lift, 1, {{"x", 1}, {"dx", 1}, {"dy", 1}}));
  Inversion inv = invert_two_form(w);
  CHECK(!inv.nondegenerate);
}

TEST_CASE("check_contact on the basic examples") {
  SUBCASE("dx + th dth is contact") {
    auto m = r11();
    OneForm alpha = OneForm::make(
        m,
        {SuperPolynomial::constant(m, 1), SuperPolynomial::generator(m, "th")},
        Parity::Even);
    CHECK(check_contact(alpha));
  }
  SUBCASE("(1+th) dx + th dth is not") {
    auto m = r11();
    OneForm alpha = OneForm::make(
        m,
        {SuperPolynomial::constant(m, 1) + SuperPolynomial::generator(m, "th"),
         SuperPolynomial::generator(m, "th")},
        Parity::Even);
    CHECK(!check_contact(alpha));
  }
  SUBCASE("odd normal forms are contact") {
    CHECK(check_contact(odd_normal_form(1)));
    CHECK(check_contact(odd_normal_form(2)));
  }
  SUBCASE("even normal forms are contact") {
    CHECK(check_contact(even_normal_form(1, {})));
    CHECK(check_contact(even_normal_form(1, {1, -1})));
    CHECK(check_contact(even_normal_form(2, {1, 1})));
  }
}

TEST_CASE("equivalence under invertible even factors") {
  auto m = r11();
  OneForm alpha = OneForm::make(
      m,
      {SuperPolynomial::constant(m, 1), SuperPolynomial::generator(m, "th")},
      Parity::Even);
  // psi = 2 (invertible even constant)
  OneForm scaled = alpha;
  for (auto& c : scaled.coeffs) c = c * Rational(2);
  CHECK(check_contact(alpha) == check_contact(scaled));

  // psi = 1 + th1 th2 on a larger chart: invertible, even, non-constant
  OneForm beta = even_normal_form(1, {1, -1});
  SuperPolynomial psi =
      SuperPolynomial::constant(beta.chart, 1) +
      SuperPolynomial::generator(beta.chart, "th1") *
          SuperPolynomial::generator(beta.chart, "th2");
  OneForm scaled2 = beta;
  for (auto& c : scaled2.coeffs) c = psi * c;
  CHECK(check_contact(beta));
  CHECK(check_contact(scaled2));
}

TEST_CASE("roundtrip tensor_to_form after inversion") {
  std::vector<OneForm> fixtures{even_normal_form(1, {}),
                                even_normal_form(1, {1}),
                                even_normal_form(2, {1, -1}),
                                odd_normal_form(1), odd_normal_form(2)};
  for (const auto& alpha : fixtures) {
    TwoForm w = symplectize(alpha);
    Inversion inv = invert_two_form(w);
    REQUIRE(inv.nondegenerate);
    CHECK(is_homological(*inv.carrier, inv.hamiltonian));
    TwoForm back = tensor_to_form(*inv.carrier, inv.hamiltonian);
    CHECK(back.polynomial() == w.polynomial());
  }
}

TEST_CASE("legendre bracket: normal-form coordinate values") {
  OneForm alpha = even_normal_form(2, {});
  const ChartPtr& c = alpha.chart;
  LegendreBracket br(alpha);
  auto g = [&](const char* n) { return SuperPolynomial::generator(c, n); };
  CHECK(br(g("z"), g("x1")) == g("x1"));
  CHECK(br(g("z"), g("x2")) == g("x2"));
  CHECK(br(g("p1"), g("x1")) == SuperPolynomial::constant(c, 1));
  CHECK(br(g("p1"), g("x2")).is_zero());
  CHECK(br(SuperPolynomial::constant(c, 1), g("z")) ==
        SuperPolynomial::constant(c, -1));
}

TEST_CASE("legendre bracket equals the coordinate formulas") {
  SUBCASE("even forms") {
    for (auto [pairs, eps] :
         std::vector<std::pair<size_t, std::vector<int>>>{
             {1, {}}, {1, {1}}, {2, {1, -1}}}) {
      OneForm alpha = even_normal_form(pairs, eps);
      LegendreBracket br(alpha);
      Sampler s(41);
      for (int it = 0; it < 25; ++it) {
        SuperPolynomial f = s.polynomial(alpha.chart, 2, 3);
        SuperPolynomial g = s.polynomial(alpha.chart, 2, 3);
        CHECK(br(f, g) ==
              legendre_even_formula(alpha.chart, pairs, eps, f, g));
      }
    }
  }
  SUBCASE("odd forms") {
    for (size_t pairs : {1u, 2u}) {
      OneForm alpha = odd_normal_form(pairs);
      LegendreBracket br(alpha);
      Sampler s(42);
      for (int it = 0; it < 25; ++it) {
        SuperPolynomial f = s.polynomial(alpha.chart, 2, 3);
        SuperPolynomial g = s.polynomial(alpha.chart, 2, 3);
        CHECK(br(f, g) == legendre_odd_formula(alpha.chart, pairs, f, g));
      }
    }
  }
}

TEST_CASE("legendre bracket satisfies the Jacobi-bracket axioms") {
  OneForm alpha = even_normal_form(1, {1});
  LegendreBracket br(alpha);
  const ChartPtr& c = alpha.chart;
  const int k = 0;  // even bracket
  Sampler s(43);
  for (int it = 0; it < 12; ++it) {
    for (Parity pf : {Parity::Even, Parity::Odd})
      for (Parity pg : {Parity::Even, Parity::Odd}) {
        SuperPolynomial f = s.parity_homogeneous(c, 2, 3, pf);
        SuperPolynomial g = s.parity_homogeneous(c, 2, 3, pg);
        SuperPolynomial e = s.polynomial(c, 2, 3);
        const int gf = int(pf), gg = int(pg);
        SuperPolynomial anti = br(g, f);
        if (((gf + k) * (gg + k)) % 2 == 0) anti = -anti;
        CHECK(br(f, g) == anti);
        SuperPolynomial jac = br(f, br(g, e)) - br(br(f, g), e);
        SuperPolynomial last = br(g, br(f, e));
        jac = (((gf + k) * (gg + k)) % 2 == 0) ? jac - last : jac + last;
        CHECK(jac.is_zero());
        // generalized Leibniz keeps the {., 1} correction
        SuperPolynomial one = SuperPolynomial::constant(c, 1);
        SuperPolynomial lhs = br(f, g * e);
        SuperPolynomial rhs = br(f, g) * e;
        SuperPolynomial cross = g * br(f, e);
        rhs = (((gf + k) * gg) % 2 == 0) ? rhs + cross : rhs - cross;
        rhs = rhs - br(f, one) * g * e;
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("legendre bracket requires a contact form") {
  auto m = r11();
  OneForm alpha = OneForm::make(
      m,
      {SuperPolynomial::constant(m, 1) + SuperPolynomial::generator(m, "th"),
       SuperPolynomial::generator(m, "th")},
      Parity::Even);
  CHECK_THROWS_AS(
      legendre_bracket(alpha, SuperPolynomial::generator(m, "x"),
                       SuperPolynomial::generator(m, "th")),
      PreconditionError);
}

TEST_CASE("inversions of random symplectizations stay homological") {
  Sampler s(77);
  OneForm base = even_normal_form(1, {1});
  // z-free perturbations keep the coefficient of dz invertible
  auto zfree = Chart::make({{"x1", Parity::Even, {0}, false},
                            {"p1", Parity::Even, {0}, false},
                            {"th1", Parity::Odd, {0}, false}},
                           1);
  for (int it = 0; it < 6; ++it) {
    // perturb the normal form by an exact term d(random even function):
    // alpha + dF stays contact for even F
    SuperPolynomial f =
        transport(s.parity_homogeneous(zfree, 2, 3, Parity::Even), base.chart);
    OneForm alpha = base;
    for (uint32_t i = 0; i < alpha.chart->size(); ++i)
      alpha.coeffs[i] = alpha.coeffs[i] + f.partial_left(i);
    TwoForm w = symplectize(alpha);
    CHECK(w.is_closed());
    Inversion inv = invert_two_form(w);
    REQUIRE(inv.nondegenerate);
    CHECK(is_homological(*inv.carrier, inv.hamiltonian));
    TwoForm back = tensor_to_form(*inv.carrier, inv.hamiltonian);
    CHECK(back.polynomial() == w.polynomial());
  }
}
