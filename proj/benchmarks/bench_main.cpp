#include <benchmark/benchmark.h>

#include "gcalc/brackets.hpp"
#include "gcalc/courant.hpp"
#include "gcalc/forms.hpp"
#include "gcalc/sampler.hpp"

namespace {

using namespace gcalc;

ChartPtr bench_chart() {
  return Chart::make({{"t", Parity::Even, {0}, true},
                      {"x", Parity::Even, {0}, false},
                      {"y", Parity::Even, {0}, false},
                      {"th1", Parity::Odd, {0}, false},
                      {"th2", Parity::Odd, {0}, false}},
                     1);
}

void BM_polynomial_product(benchmark::State& state) {
  auto c = bench_chart();
  Sampler s(1);
  SuperPolynomial f = s.polynomial(c, 4, 12);
  SuperPolynomial g = s.polynomial(c, 4, 12);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_polynomial_product);

void BM_canonical_bracket(benchmark::State& state) {
  auto b = BracketCarrier::on(cotangent_lift_chart(bench_chart(), 1, true));
  Sampler s(2);
  SuperPolynomial f = s.polynomial(b.chart(), 3, 10);
  SuperPolynomial g = s.polynomial(b.chart(), 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_bracket(b, f, g));
}
BENCHMARK(BM_canonical_bracket);

void BM_invert_two_form_q3(benchmark::State& state) {
  std::vector<std::vector<Rational>> g{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CourantSpec spec = CourantSpec::zero(2, 3, g);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_chart_and_hamiltonian(spec));
}
BENCHMARK(BM_invert_two_form_q3);

void BM_master_equation_so3(benchmark::State& state) {
  CourantSpec s = CourantSpec::zero(0, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  SuperPolynomial one = SuperPolynomial::constant(s.base, 1);
  int eps[3][3][3] = {};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s.a[i][j][k] = one * Rational(eps[i][j][k]);
  CourantModel model = build_chart_and_hamiltonian(s);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_master_equation(model));
}
BENCHMARK(BM_master_equation_so3);

}  // namespace

BENCHMARK_MAIN();
