#include <doctest.h>

#include <functional>

#include "gcalc/brackets.hpp"
#include "gcalc/sampler.hpp"
#include "gcalc/wade.hpp"
#include "test_util.hpp"

using namespace gcalc;

namespace {

// T*[2]T[1](R^x x R^m) model: carrier, de Rham cubic Hamiltonian, and the
// encoding of sections as weight-(1,1) functions
struct DeRhamModel {
  ChartPtr base;     // x-only chart shared with WadeSection
  ChartPtr big;      // cotangent lift of the reversed tangent lift
  BracketCarrier carrier;
  SuperPolynomial h;

  static DeRhamModel over(size_t m) {
    std::vector<Generator> gens;
    gens.push_back({"t", Parity::Even, {0}, true});
    for (size_t a = 0; a < m; ++a)
      gens.push_back(
          {"x" + std::to_string(a + 1), Parity::Even, {0}, false});
    ChartPtr pbase = Chart::make(std::move(gens), 1);
    ChartPtr t1 = tangent_lift_chart(pbase, /*reverse=*/true);
    ChartPtr big = cotangent_lift_chart(t1, 2, /*reverse=*/false);
    BracketCarrier carrier = BracketCarrier::on(big);
    auto g = [&](const std::string& n) {
      return SuperPolynomial::generator(big, n);
    };
    SuperPolynomial h = g("dt") * g("p_t");
    for (size_t a = 0; a < m; ++a) {
      std::string x = "x" + std::to_string(a + 1);
      h = h + g("d" + x) * g("p_" + x);
    }
    std::vector<Generator> bgens;
    for (size_t a = 0; a < m; ++a)
      bgens.push_back(
          {"x" + std::to_string(a + 1), Parity::Even, {0}, false});
    ChartPtr base = Chart::make(std::move(bgens), 1);
    return DeRhamModel{base, big, std::move(carrier), std::move(h)};
  }

  SuperPolynomial iota(const WadeSection& u) const {
    SuperPolynomial out = SuperPolynomial::zero(big);
    SuperPolynomial t = SuperPolynomial::generator(big, "t");
    Rational half(1, 2);
    for (uint32_t a = 0; a < u.base->size(); ++a) {
      std::string x = u.base->gen(a).name;
      out = out + transport(u.vec[a], big) *
                      SuperPolynomial::generator(big, "p_d" + x);
      out = out + t * half * transport(u.form[a], big) *
                      SuperPolynomial::generator(big, "d" + x);
    }
    out = out + transport(u.f, big) * t *
                    SuperPolynomial::generator(big, "p_dt");
    out = out + transport(u.g, big) * half *
                    SuperPolynomial::generator(big, "dt");
    return out;
  }

  SuperPolynomial derived(const SuperPolynomial& a,
                          const SuperPolynomial& b) const {
    return derived_bracket(carrier, h, a, b);
  }
};

WadeSection section_of(const ChartPtr& base,
                       const std::function<void(WadeSection&)>& fill) {
  WadeSection s = WadeSection::zero(base);
  fill(s);
  return s;
}

}  // namespace

TEST_CASE("wade bracket examples") {
  auto base = gcalc_test::even_line(1);
  auto one = SuperPolynomial::constant(base, 1);
  auto x = SuperPolynomial::generator(base, "x1");

  SUBCASE("vector against x dx") {
    WadeSection u = section_of(base, [&](WadeSection& s) { s.vec[0] = one; });
    WadeSection v =
        section_of(base, [&](WadeSection& s) { s.form[0] = x; });
    WadeSection w = wade_bracket(u, v);
    CHECK(w.vec[0].is_zero());
    CHECK(w.f.is_zero());
    CHECK(w.form[0] == one);  // L_{d/dx}(x dx) = dx
    CHECK(w.g.is_zero());
  }
  SUBCASE("unit function against a form") {
    WadeSection u = section_of(base, [&](WadeSection& s) { s.f = one; });
    WadeSection v =
        section_of(base, [&](WadeSection& s) { s.form[0] = x * x; });
    WadeSection w = wade_bracket(u, v);
    CHECK(w.vec[0].is_zero());
    CHECK(w.f.is_zero());
    CHECK(w.form[0] == x * x);  // f1 alpha2 survives
    CHECK(w.g.is_zero());
  }
  SUBCASE("pairing of a section with itself") {
    WadeSection u = section_of(base, [&](WadeSection& s) {
      s.vec[0] = x;
      s.f = SuperPolynomial::constant(base, 2);
      s.form[0] = x * x;
      s.g = SuperPolynomial::constant(base, 3);
    });
    CHECK(wade_pairing(u, u) ==
          x * x * x + SuperPolynomial::constant(base, 6));
  }
}

TEST_CASE("wade bracket equals the derived bracket of the de Rham model") {
  for (size_t m : {1u, 2u}) {
    DeRhamModel model = DeRhamModel::over(m);
    REQUIRE(is_homological(model.carrier, model.h));
    const ChartPtr& base = model.base;

    // monomial sections of component degree <= 2: x^K in one slot
    std::vector<SuperPolynomial> monos;
    monos.push_back(SuperPolynomial::constant(base, 1));
    for (uint32_t a = 0; a < base->size(); ++a) {
      auto xa = SuperPolynomial::generator(base, a);
      monos.push_back(xa);
      monos.push_back(xa * xa);
      for (uint32_t b = a + 1; b < base->size(); ++b)
        monos.push_back(xa * SuperPolynomial::generator(base, b));
    }
    enum Slot { VecSlot, FSlot, FormSlot, GSlot };
    std::vector<std::pair<Slot, uint32_t>> slots;
    for (uint32_t a = 0; a < base->size(); ++a)
      slots.push_back({VecSlot, a});
    slots.push_back({FSlot, 0});
    for (uint32_t a = 0; a < base->size(); ++a)
      slots.push_back({FormSlot, a});
    slots.push_back({GSlot, 0});
    auto make = [&](std::pair<Slot, uint32_t> slot,
                    const SuperPolynomial& c) {
      return section_of(base, [&](WadeSection& s) {
        switch (slot.first) {
          case VecSlot: s.vec[slot.second] = c; break;
          case FSlot: s.f = c; break;
          case FormSlot: s.form[slot.second] = c; break;
          case GSlot: s.g = c; break;
        }
      });
    };

    for (const auto& su : slots)
      for (const auto& mu : monos)
        for (const auto& sv : slots)
          for (const auto& mv : monos) {
            WadeSection u = make(su, mu);
            WadeSection v = make(sv, mv);
            SuperPolynomial lhs = model.derived(model.iota(u), model.iota(v));
            SuperPolynomial rhs = model.iota(wade_bracket(u, v));
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("pairing and anchor match the model") {
  DeRhamModel model = DeRhamModel::over(2);
  const ChartPtr& base = model.base;
  Sampler s(91);
  auto t = SuperPolynomial::generator(model.big, "t");
  for (int it = 0; it < 10; ++it) {
    WadeSection u = WadeSection::zero(base);
    WadeSection v = WadeSection::zero(base);
    for (uint32_t a = 0; a < base->size(); ++a) {
      u.vec[a] = s.polynomial(base, 2, 2);
      u.form[a] = s.polynomial(base, 2, 2);
      v.vec[a] = s.polynomial(base, 2, 2);
      v.form[a] = s.polynomial(base, 2, 2);
    }
    u.f = s.polynomial(base, 2, 2);
    u.g = s.polynomial(base, 2, 2);
    v.f = s.polynomial(base, 2, 2);
    v.g = s.polynomial(base, 2, 2);

    SuperPolynomial pair_model =
        canonical_bracket(model.carrier, model.iota(u), model.iota(v));
    CHECK(pair_model == t * transport(wade_pairing(u, v), model.big));

    SuperPolynomial hfun = s.polynomial(base, 2, 2);
    SuperPolynomial anchor_model =
        model.derived(model.iota(u), t * transport(hfun, model.big));
    CHECK(anchor_model ==
          t * transport(wade_anchor_apply(u, hfun), model.big));
  }
}
