#include <doctest.h>

#include "gcalc/chart.hpp"
#include "gcalc/errors.hpp"
#include "test_util.hpp"

using namespace gcalc;

TEST_CASE("make_chart validation") {
  CHECK_NOTHROW(Chart::make({{"x", Parity::Even, {0}, false}}, 1));
  CHECK_THROWS_AS(Chart::make({{"x", Parity::Even, {0}, false},
                               {"x", Parity::Odd, {0}, false}},
                              1),
                  DomainError);
  CHECK_THROWS_AS(Chart::make({{"th", Parity::Odd, {0}, true}}, 1),
                  DomainError);
  CHECK_THROWS_AS(Chart::make({{"x", Parity::Even, {0, 1}, false}}, 1),
                  DomainError);
}

TEST_CASE("cotangent lift weights and pairs") {
  auto c = Chart::make({{"x", Parity::Even, {0}, false}}, 1);
  auto l = cotangent_lift_chart(c, 1, false);
  REQUIRE(l->size() == 2);
  CHECK(l->gen(1).name == "p_x");
  CHECK(l->gen(0).weight == Weight{0, 0});
  CHECK(l->gen(1).weight == Weight{1, 1});
  CHECK(l->gen(1).parity == Parity::Even);
  REQUIRE(l->darboux_pairs().size() == 1);
  CHECK(l->darboux_pairs()[0].base == 0);
  CHECK(l->darboux_pairs()[0].momentum == 1);

  auto lr = cotangent_lift_chart(c, 1, true);
  CHECK(lr->gen(1).parity == Parity::Odd);

  // momentum of a weight-1 generator under an r=2 lift carries (2, 1)
  auto z = Chart::make({{"z", Parity::Even, {1}, false}}, 1);
  auto l2 = cotangent_lift_chart(z, 2, false);
  CHECK(l2->gen(1).weight == Weight{2, 1});

  CHECK_THROWS_AS(cotangent_lift_chart(c, -1, false), DomainError);
}

TEST_CASE("pair weights sum to the form weight") {
  auto c = Chart::make({{"x", Parity::Even, {0, 2}, false},
                        {"th", Parity::Odd, {1, -1}, false}},
                       2);
  for (long r : {0L, 1L, 2L, 3L}) {
    auto l = cotangent_lift_chart(c, r, r % 2 == 1);
    for (const auto& pr : l->darboux_pairs()) {
      Weight sum = weight_add(l->gen(pr.base).weight,
                              l->gen(pr.momentum).weight);
      CHECK(sum == Weight(l->grading_dim(), r));
    }
  }
}

TEST_CASE("lifts preserve original generators") {
  auto c = Chart::make({{"x", Parity::Even, {3}, false},
                        {"th", Parity::Odd, {1}, false}},
                       1);
  for (auto l : {cotangent_lift_chart(c, 2, true), tangent_lift_chart(c, true)}) {
    REQUIRE(l->size() == 4);
    for (uint32_t i = 0; i < c->size(); ++i) {
      CHECK(l->gen(i).name == c->gen(i).name);
      CHECK(l->gen(i).parity == c->gen(i).parity);
      CHECK(l->gen(i).weight[1] == c->gen(i).weight[0]);
      CHECK(l->gen(i).weight[0] == 0);
    }
  }
}

TEST_CASE("tangent lift") {
  auto c = Chart::make({{"x", Parity::Even, {}, false},
                        {"th", Parity::Odd, {}, false}},
                       0);
  auto l = tangent_lift_chart(c, true);
  REQUIRE(l->size() == 4);
  CHECK(l->gen(2).name == "dx");
  CHECK(l->gen(2).parity == Parity::Odd);   // reversed fiber of even x
  CHECK(l->gen(3).name == "dth");
  CHECK(l->gen(3).parity == Parity::Even);  // reversed fiber of odd th
  CHECK(l->gen(2).weight == Weight{1});
  CHECK(l->gen(3).weight == Weight{1});

  auto lp = tangent_lift_chart(c, false);
  CHECK(lp->gen(2).parity == Parity::Even);
  CHECK(lp->gen(3).parity == Parity::Odd);
}

TEST_CASE("fiber extension") {
  auto c = Chart::make({{"x", Parity::Even, {0}, false}}, 1);
  auto e = extend_with_fiber(c);
  REQUIRE(e->size() == 2);
  CHECK(e->gen(0).name == "t");
  CHECK(e->gen(0).invertible);
  CHECK(e->gen(0).parity == Parity::Even);
  CHECK(e->gen(0).weight == Weight{1, 0});
  CHECK(e->gen(1).weight == Weight{0, 0});
  CHECK(e->distinguished_t() == uint32_t(0));
  CHECK_THROWS_AS(extend_with_fiber(e), DomainError);
}

TEST_CASE("momentum names avoid collisions on iterated lifts") {
  auto c = Chart::make({{"t", Parity::Even, {0}, true},
                        {"x", Parity::Even, {0}, false}},
                       1);
  auto p1 = cotangent_lift_chart(c, 1, false);
  auto p2 = cotangent_lift_chart(p1, 1, true);
  // all names unique by construction; spot-check the renamed ones
  CHECK(p2->find("p_p_x").has_value());
  CHECK(p2->find("pp_x").has_value());
  CHECK(p2->find("pp_t").has_value());
}
