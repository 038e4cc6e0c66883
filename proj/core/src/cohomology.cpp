#include "gcalc/cohomology.hpp"

#include <map>

#include "gcalc/errors.hpp"

namespace gcalc {

namespace {

// All chart monomials with exponents in the stated box, as (coeff-1)
// polynomials paired with their weight.
void enumerate_monomials(const ChartPtr& chart, long bound,
                         const std::function<void(const SuperPolynomial&)>& f) {
  std::vector<std::pair<uint32_t, int64_t>> exps;
  std::function<void(uint32_t)> rec = [&](uint32_t i) {
    if (i == chart->size()) {
      f(SuperPolynomial::term(chart, 1, exps));
      return;
    }
    const Generator& g = chart->gen(i);
    int64_t lo = 0, hi = 0;
    if (g.parity == Parity::Odd) {
      lo = 0;
      hi = 1;
    } else if (g.invertible) {
      lo = -bound;
      hi = bound;
    } else {
      lo = 0;
      hi = bound;
    }
    for (int64_t e = lo; e <= hi; ++e) {
      if (e != 0) exps.push_back({i, e});
      rec(i + 1);
      if (e != 0) exps.pop_back();
    }
  };
  rec(0);
}

}  // namespace

GradedComplex differential_from_hamiltonian(const BracketCarrier& b,
                                            const SuperPolynomial& j,
                                            const WeightSelector& select,
                                            long truncation,
                                            long exponent_bound) {
  if (!is_homological(b, j))
    throw PreconditionError(
        "differential requires a homological Hamiltonian");
  const ChartPtr& chart = b.chart();

  GradedComplex cx;
  cx.spaces.resize(size_t(truncation) + 1);
  for (long k = 0; k <= truncation; ++k) cx.spaces[k].degree = k;

  std::map<Monomial, std::pair<long, size_t>> index;  // degree, position
  enumerate_monomials(chart, exponent_bound, [&](const SuperPolynomial& m) {
    if (m.is_zero()) return;
    const Monomial& mono = m.terms().begin()->first;
    auto deg = select(mono.weight(*chart));
    if (!deg || *deg < 0 || *deg > truncation) return;
    auto& space = cx.spaces[size_t(*deg)];
    index.emplace(mono, std::make_pair(*deg, space.basis.size()));
    space.basis.push_back(m);
  });

  cx.matrices.resize(size_t(truncation));
  for (long k = 0; k < truncation; ++k) {
    const auto& src = cx.spaces[size_t(k)].basis;
    const auto& dst = cx.spaces[size_t(k) + 1].basis;
    cx.matrices[size_t(k)].assign(dst.size(),
                                  std::vector<Rational>(src.size(), 0));
    for (size_t col = 0; col < src.size(); ++col) {
      SuperPolynomial im = canonical_bracket(b, j, src[col]);
      for (const auto& [m, c] : im.terms()) {
        auto it = index.find(m);
        if (it == index.end() || it->second.first != k + 1)
          throw DomainError(
              "selected subspace is not closed under the differential");
        cx.matrices[size_t(k)][it->second.second][col] = c;
      }
    }
  }
  // top-degree closure: images of the top space must vanish or leave the
  // truncation window entirely; tolerated by construction
  return cx;
}

bool check_complex(const GradedComplex& c) {
  for (size_t k = 0; k + 1 < c.matrices.size(); ++k) {
    const auto& a = c.matrices[k + 1];
    const auto& b = c.matrices[k];
    if (a.empty() || b.empty()) continue;
    const size_t rows = a.size(), mid = b.size(), cols = b[0].size();
    if (mid == 0) continue;
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        Rational s = 0;
        for (size_t l = 0; l < mid; ++l) s += a[i][l] * b[l][j];
        if (s != 0) return false;
      }
  }
  return true;
}

std::vector<long> cohomology_dims(const GradedComplex& c) {
  std::vector<long> dims;
  const size_t n = c.spaces.size();
  auto rank_of = [&](size_t k) -> long {
    if (k >= c.matrices.size()) return 0;
    if (c.matrices[k].empty() || c.matrices[k][0].empty()) return 0;
    return long(exact_rank(c.matrices[k]));
  };
  for (size_t k = 0; k < n; ++k) {
    long dim = long(c.spaces[k].basis.size());
    long rk_out = rank_of(k);          // rank of d_k (0 beyond truncation)
    long rk_in = k == 0 ? 0 : rank_of(k - 1);
    dims.push_back(dim - rk_out - rk_in);
  }
  return dims;
}

TwistedDeRham::TwistedDeRham(size_t m) {
  std::vector<Generator> gens;
  for (size_t a = 0; a < m; ++a)
    gens.push_back({"x" + std::to_string(a + 1), Parity::Even, {}, false});
  fs_ = FormSpace::over(Chart::make(std::move(gens), 0));
}

std::pair<SuperPolynomial, SuperPolynomial> TwistedDeRham::apply(
    const SuperPolynomial& mu, const SuperPolynomial& nu) const {
  // minus sign from moving d past the odd twisting form; this is the
  // square-zero operator the model Hamiltonian induces
  return {fs_.d(mu), mu - fs_.d(nu)};
}

TwistedDeRhamModel twisted_de_rham_model(size_t m) {
  std::vector<Generator> gens;
  gens.push_back({"t", Parity::Even, {1}, true});
  for (size_t a = 0; a < m; ++a)
    gens.push_back({"x" + std::to_string(a + 1), Parity::Even, {0}, false});
  ChartPtr base = Chart::make(std::move(gens), 1);
  ChartPtr p = cotangent_lift_chart(base, 1, /*reverse=*/false);
  ChartPtr pi = cotangent_lift_chart(p, 1, /*reverse=*/true);
  BracketCarrier carrier = BracketCarrier::on(pi);
  // quadratic Hamiltonian of the canonical Poisson tensor of the cotangent
  // chart p: each momentum of a momentum pairs with the momentum of its
  // base
  SuperPolynomial h = SuperPolynomial::zero(pi);
  const size_t n = base->size();
  for (uint32_t a = 0; a < n; ++a) {
    // on pi, generators sit as: [0..2n) = p's generators, [2n..4n) their
    // momenta; base u = a, its p-momentum = n + a
    SuperPolynomial pi_u = SuperPolynomial::generator(pi, uint32_t(2 * n + a));
    SuperPolynomial pi_pu =
        SuperPolynomial::generator(pi, uint32_t(2 * n + n + a));
    h = h + pi_pu * pi_u;
  }
  // weight layout on pi: [0] reversed-fiber degree, [1] cotangent fiber
  // degree, [2] the invertible-fiber degree
  WeightSelector sel = [](const Weight& w) -> std::optional<long> {
    if (w.size() != 3) return std::nullopt;
    if (w[1] != 0 || w[2] != 1) return std::nullopt;
    return w[0];
  };
  return TwistedDeRhamModel{std::move(carrier), std::move(h), std::move(sel)};
}

}  // namespace gcalc
