#include <doctest.h>

#include <thread>

#include "gcalc/brackets.hpp"
#include "gcalc/errors.hpp"
#include "gcalc/sampler.hpp"
#include "test_util.hpp"

using namespace gcalc;

namespace {

BracketCarrier lift_of(const ChartPtr& base, bool reversed) {
  return BracketCarrier::on(cotangent_lift_chart(base, 1, reversed));
}

// graded antisymmetry, Jacobi, Leibniz of a bracket on sampled
// parity-homogeneous polynomials
void check_axioms(const BracketCarrier& b, uint64_t seed, int rounds) {
  const ChartPtr& c = b.chart();
  const int k = int(b.bracket_parity());
  Sampler s(seed);
  auto br = [&](const SuperPolynomial& f, const SuperPolynomial& g) {
    return canonical_bracket(b, f, g);
  };
  for (int it = 0; it < rounds; ++it) {
    for (Parity pf : {Parity::Even, Parity::Odd})
      for (Parity pg : {Parity::Even, Parity::Odd}) {
        SuperPolynomial f = s.parity_homogeneous(c, 2, 3, pf);
        SuperPolynomial g = s.parity_homogeneous(c, 2, 3, pg);
        SuperPolynomial e = s.parity_homogeneous(c, 2, 3, Parity::Even) +
                            s.parity_homogeneous(c, 2, 2, Parity::Odd);
        const int gf = int(pf), gg = int(pg);
        // (2.6)
        SuperPolynomial anti = br(g, f);
        if (((gf + k) * (gg + k)) % 2 == 0) anti = -anti;
        CHECK(br(f, g) == anti);
        // (2.7)
        SuperPolynomial jac =
            br(f, br(g, e)) - br(br(f, g), e);
        SuperPolynomial last = br(g, br(f, e));
        if (((gf + k) * (gg + k)) % 2 == 0)
          jac = jac - last;
        else
          jac = jac + last;
        CHECK(jac.is_zero());
        // (2.8) with {.,1} = 0
        SuperPolynomial lhs = br(f, g * e);
        SuperPolynomial rhs = br(f, g) * e;
        SuperPolynomial cross = g * br(f, e);
        rhs = (((gf + k) * gg) % 2 == 0) ? rhs + cross : rhs - cross;
        CHECK(lhs == rhs);
        CHECK(br(f, SuperPolynomial::constant(c, 1)).is_zero());
      }
  }
}

}  // namespace

TEST_CASE("calibration {p, x} = delta") {
  for (bool reversed : {false, true}) {
    auto b = lift_of(gcalc_test::r11(), reversed);
    auto c = b.chart();
    for (const auto& pr : b.pairs()) {
      auto x = SuperPolynomial::generator(c, pr.base);
      auto p = SuperPolynomial::generator(c, pr.momentum);
      CHECK(canonical_bracket(b, p, x) == SuperPolynomial::constant(c, 1));
      CHECK(canonical_bracket(b, x, x).is_zero());
      CHECK(canonical_bracket(b, p, p).is_zero());
    }
    auto one = SuperPolynomial::constant(c, 1);
    auto g = SuperPolynomial::generator(c, uint32_t(0));
    CHECK(canonical_bracket(b, one, g).is_zero());
  }
}

TEST_CASE("odd-pair expansion {th pi, th} = th") {
  auto base = Chart::make({{"th", Parity::Odd, {0}, false}}, 1);
  auto b = lift_of(base, false);
  auto c = b.chart();
  auto th = SuperPolynomial::generator(c, "th");
  auto pi = SuperPolynomial::generator(c, "p_th");
  CHECK(canonical_bracket(b, th * pi, th) == th);
}

TEST_CASE("bracket axioms on an even carrier") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"th", Parity::Odd, {0}, false},
                           {"t", Parity::Even, {0}, true}},
                          1);
  check_axioms(lift_of(base, false), 101, 8);
}

TEST_CASE("bracket axioms on an odd carrier") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"th", Parity::Odd, {0}, false},
                           {"t", Parity::Even, {0}, true}},
                          1);
  check_axioms(lift_of(base, true), 202, 8);
}

TEST_CASE("bracket weight drop equals the form weight") {
  auto base = Chart::make({{"x", Parity::Even, {2}, false},
                           {"y", Parity::Even, {1}, false},
                           {"th", Parity::Odd, {1}, false}},
                          1);
  for (long r : {1L, 2L}) {
    auto b = BracketCarrier::on(
        cotangent_lift_chart(base, r, r % 2 == 1));
    const ChartPtr& c = b.chart();
    Sampler s(5);
    Weight drop(c->grading_dim(), r);
    for (int it = 0; it < 40; ++it) {
      SuperPolynomial f = s.polynomial(c, 2, 1);
      SuperPolynomial g = s.polynomial(c, 2, 1);
      SuperPolynomial h = canonical_bracket(b, f, g);
      if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
      GradeInfo gi = h.grade();
      REQUIRE(gi.weight_homogeneous);
      Weight expect =
          weight_add(f.grade().weight, g.grade().weight);
      for (size_t i = 0; i < expect.size(); ++i) expect[i] -= drop[i];
      CHECK(gi.weight == expect);
    }
  }
}

TEST_CASE("derived bracket of a homological Hamiltonian satisfies Jacobi") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"y", Parity::Even, {0}, false}},
                          1);
  auto b = lift_of(base, true);  // Schouten carrier
  auto c = b.chart();
  auto h = SuperPolynomial::generator(c, "p_x") *
           SuperPolynomial::generator(c, "p_y");
  REQUIRE(is_homological(b, h));
  Sampler s(7);
  auto br = [&](const SuperPolynomial& f, const SuperPolynomial& g) {
    return derived_bracket(b, h, f, g);
  };
  // derived bracket of an even tensor is an even bracket; graded Jacobi
  // on all parity combinations
  for (int it = 0; it < 15; ++it) {
    for (Parity pf : {Parity::Even, Parity::Odd})
      for (Parity pg : {Parity::Even, Parity::Odd}) {
        SuperPolynomial f = s.parity_homogeneous(c, 2, 3, pf);
        SuperPolynomial g = s.parity_homogeneous(c, 2, 3, pg);
        SuperPolynomial e = s.polynomial(c, 2, 3);
        SuperPolynomial jac = br(f, br(g, e)) - br(br(f, g), e);
        SuperPolynomial last = br(g, br(f, e));
        jac = ((int(pf) * int(pg)) % 2 == 0) ? jac - last : jac + last;
        CHECK(jac.is_zero());
      }
  }
  CHECK(br(SuperPolynomial::constant(c, 1), h).is_zero());
}

TEST_CASE("derived coordinate brackets of a constant tensor") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"y", Parity::Even, {0}, false}},
                          1);
  auto b = lift_of(base, true);
  auto c = b.chart();
  auto h = SuperPolynomial::generator(c, "p_x") *
           SuperPolynomial::generator(c, "p_y");
  auto x = SuperPolynomial::generator(c, "x");
  auto y = SuperPolynomial::generator(c, "y");
  SuperPolynomial bxy = derived_bracket(b, h, x, y);
  SuperPolynomial byx = derived_bracket(b, h, y, x);
  CHECK((bxy == SuperPolynomial::constant(c, 1) ||
         bxy == SuperPolynomial::constant(c, -1)));
  CHECK(byx == -bxy);
  CHECK(derived_bracket(b, h, x, x).is_zero());
  CHECK(derived_bracket(b, h, SuperPolynomial::constant(c, 1), y).is_zero());
}

TEST_CASE("is_homological") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"y", Parity::Even, {0}, false},
                           {"z", Parity::Even, {0}, false}},
                          1);
  auto b = lift_of(base, true);
  auto c = b.chart();
  auto g = [&](const char* n) { return SuperPolynomial::generator(c, n); };
  CHECK(is_homological(b, g("p_x") * g("p_y")));
  // the bivector y dx^dy + dy^dz fails the Jacobi identity
  SuperPolynomial bad = g("y") * g("p_x") * g("p_y") + g("p_y") * g("p_z");
  CHECK(!is_homological(b, bad));
  SuperPolynomial res = canonical_bracket(b, bad, bad);
  // residual proportional to the top coordinate trivector
  SuperPolynomial tri = g("p_x") * g("p_y") * g("p_z");
  REQUIRE(res.term_count() == 1);
  REQUIRE(tri.term_count() == 1);
  CHECK(res.terms().begin()->first == tri.terms().begin()->first);
}

TEST_CASE("carrier validation") {
  auto base = gcalc_test::r11();
  CHECK_THROWS_AS(BracketCarrier::on(base), DomainError);
  auto l = cotangent_lift_chart(base, 1, false);
  CHECK_NOTHROW(BracketCarrier::on(l));
}

TEST_CASE("hamiltonian/bracket-matrix inversion pair") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"th", Parity::Odd, {0}, false},
                           {"t", Parity::Even, {0}, true}},
                          1);
  for (bool reversed : {true, false}) {
    auto b = lift_of(base, reversed);
    const ChartPtr& c = b.chart();
    Sampler s(reversed ? 31 : 32);
    for (int it = 0; it < 10; ++it) {
      // random quadratic Hamiltonian in the momenta
      SuperPolynomial h = SuperPolynomial::zero(c);
      for (const auto& p1 : b.pairs())
        for (const auto& p2 : b.pairs()) {
          SuperPolynomial coeff = s.polynomial(base, 2, 2);
          h = h + SuperPolynomial::generator(c, p1.momentum) *
                      transport(coeff, c) *
                      SuperPolynomial::generator(c, p2.momentum);
        }
      auto m = bracket_matrix(b, h);
      SuperPolynomial h2 = hamiltonian_from_bracket_matrix(b, m);
      auto m2 = bracket_matrix(b, h2);
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) CHECK(m[i][j] == m2[i][j]);
    }
  }
}

TEST_CASE("linear tensor closes on linear functions with anchor Leibniz") {
  // linear so(3)-type Poisson tensor on the reversed cotangent lift
  auto base = Chart::make({{"x", Parity::Even, {1}, false},
                           {"y", Parity::Even, {1}, false},
                           {"z", Parity::Even, {1}, false}},
                          1);
  auto b = lift_of(base, true);
  auto c = b.chart();
  auto g = [&](const char* n) { return SuperPolynomial::generator(c, n); };
  SuperPolynomial j = g("z") * g("p_x") * g("p_y") +
                      g("x") * g("p_y") * g("p_z") +
                      g("y") * g("p_z") * g("p_x");
  REQUIRE(is_homological(b, j));
  auto br = [&](const SuperPolynomial& f, const SuperPolynomial& gg) {
    return derived_bracket(b, j, f, gg);
  };
  // weight-1 monomials (linear functions) close under the bracket
  std::vector<SuperPolynomial> lin{g("x"), g("y"), g("z")};
  for (const auto& e : lin)
    for (const auto& f : lin) {
      SuperPolynomial r = br(e, f);
      if (r.is_zero()) continue;
      GradeInfo gi = r.grade();
      REQUIRE(gi.weight_homogeneous);
      CHECK(gi.weight[1] == 1);
    }
  // anchor Leibniz [e, f e'] = f[e, e'] + rho(e)(f) e' on the tangent
  // algebroid of the line: fiber coordinate y over base x
  auto tbase = Chart::make({{"x", Parity::Even, {0}, false},
                            {"y", Parity::Even, {1}, false}},
                           1);
  auto tb = lift_of(tbase, true);
  auto tc = tb.chart();
  auto tg = [&](const char* n) { return SuperPolynomial::generator(tc, n); };
  SuperPolynomial tj = tg("p_x") * tg("p_y");
  REQUIRE(is_homological(tb, tj));
  auto tbr = [&](const SuperPolynomial& f, const SuperPolynomial& gg) {
    return derived_bracket(tb, tj, f, gg);
  };
  Sampler s2(9);
  for (int it = 0; it < 20; ++it) {
    // f = random basic polynomial in x
    SuperPolynomial f = SuperPolynomial::zero(tc);
    for (int d = 0; d <= 3; ++d)
      f = f + make_term(tc, s2.rational(), {{"x", d}});
    SuperPolynomial y = tg("y");
    SuperPolynomial anchor_f =
        tbr(y, f);  // rho(d/dx)(f) for the tangent algebroid
    CHECK(anchor_f == f.partial_left(tc->index_of("x")));
    CHECK(tbr(y, f * y) == f * tbr(y, y) + anchor_f * y);
  }
}

TEST_CASE("concurrent evaluation on shared immutable values") {
  auto base = Chart::make({{"x", Parity::Even, {0}, false},
                           {"th", Parity::Odd, {0}, false}},
                          1);
  auto b = BracketCarrier::on(cotangent_lift_chart(base, 1, true));
  Sampler s(500);
  std::vector<SuperPolynomial> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(s.polynomial(b.chart(), 3, 5));
  std::vector<SuperPolynomial> serial;
  for (int i = 0; i < 16; ++i)
    serial.push_back(canonical_bracket(b, inputs[i], inputs[(i + 1) % 16]));
  std::vector<SuperPolynomial> parallel(16, SuperPolynomial::zero(b.chart()));
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < 16; i += 4)
        parallel[i] = canonical_bracket(b, inputs[i], inputs[(i + 1) % 16]);
    });
  for (auto& th : pool) th.join();
  for (int i = 0; i < 16; ++i) CHECK(serial[i] == parallel[i]);
}
