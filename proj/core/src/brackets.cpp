#include "gcalc/brackets.hpp"

#include <algorithm>

#include "gcalc/errors.hpp"

namespace gcalc {

BracketCarrier BracketCarrier::on(ChartPtr chart) {
  const auto& pairs = chart->darboux_pairs();
  if (pairs.empty())
    throw DomainError("bracket carrier requires a darboux-paired chart");
  std::vector<char> seen(chart->size(), 0);
  int offset = -1;
  for (const auto& p : pairs) {
    if (p.base == p.momentum || seen[p.base] || seen[p.momentum])
      throw DomainError("darboux pairing is not a perfect matching");
    seen[p.base] = seen[p.momentum] = 1;
    int off = (uint8_t(chart->parity(p.base)) +
               uint8_t(chart->parity(p.momentum))) & 1;
    if (offset == -1)
      offset = off;
    else if (offset != off)
      throw DomainError("mixed momentum parity offsets in one carrier");
  }
  for (char s : seen)
    if (!s) throw DomainError("carrier chart has unpaired generators");
  return BracketCarrier(std::move(chart),
                        offset ? Parity::Odd : Parity::Even);
}

SuperPolynomial canonical_bracket(const BracketCarrier& b,
                                  const SuperPolynomial& f,
                                  const SuperPolynomial& g) {
  require_same_chart(b.chart(), f.chart() ? f.chart() : b.chart());
  require_same_chart(b.chart(), g.chart() ? g.chart() : b.chart());
  const Chart& chart = *b.chart();
  const int k = int(b.bracket_parity());
  SuperPolynomial out = SuperPolynomial::zero(b.chart());
  for (const auto& pr : b.pairs()) {
    const uint32_t x = pr.base, p = pr.momentum;
    // {p, x} = +1 block
    out = out + f.partial_right(p) * g.partial_left(x);
    // {x, p} = -(-1)^{g(x)(1+k)} block
    const int gx = int(chart.parity(x));
    const bool plus = ((gx * (1 + k)) & 1) != 0;  // -(-1)^{odd} = +1
    SuperPolynomial cross = f.partial_right(x) * g.partial_left(p);
    out = plus ? out + cross : out - cross;
  }
  return out;
}

SuperPolynomial derived_bracket(const BracketCarrier& b,
                                const SuperPolynomial& h,
                                const SuperPolynomial& f,
                                const SuperPolynomial& g) {
  return canonical_bracket(b, canonical_bracket(b, f, h), g);
}

bool is_homological(const BracketCarrier& b, const SuperPolynomial& h) {
  return canonical_bracket(b, h, h).is_zero();
}

SuperPolynomial transport(const SuperPolynomial& p, const ChartPtr& target) {
  if (!p.chart()) return SuperPolynomial::zero(target);
  if (p.chart() == target) return p;
  if (p.chart()->same_as(*target)) {
    SuperPolynomial q = SuperPolynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
      std::vector<std::pair<uint32_t, int64_t>> exps;
      for (const auto& [i, e] : m.even()) exps.push_back({i, e});
      for (uint32_t i : m.odd()) exps.push_back({i, 1});
      q = q + SuperPolynomial::term(target, c, exps);
    }
    return q;
  }
  const Chart& src = *p.chart();
  std::vector<int64_t> remap(src.size(), -1);
  auto lookup = [&](uint32_t i) {
    if (remap[i] < 0) remap[i] = target->index_of(src.gen(i).name);
    return uint32_t(remap[i]);
  };
  SuperPolynomial q = SuperPolynomial::zero(target);
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::pair<uint32_t, int64_t>> exps;
    // keep the source canonical factor order; term() normalizes with signs
    for (const auto& [i, e] : m.even()) exps.push_back({lookup(i), e});
    for (uint32_t i : m.odd()) exps.push_back({lookup(i), 1});
    q = q + SuperPolynomial::term(target, c, exps);
  }
  return q;
}

std::vector<std::vector<SuperPolynomial>> bracket_matrix(
    const BracketCarrier& b, const SuperPolynomial& h) {
  const auto& pairs = b.pairs();
  const size_t n = pairs.size();
  std::vector<std::vector<SuperPolynomial>> m(
      n, std::vector<SuperPolynomial>(n, SuperPolynomial::zero(b.chart())));
  std::vector<SuperPolynomial> coords;
  coords.reserve(n);
  for (const auto& pr : pairs)
    coords.push_back(SuperPolynomial::generator(b.chart(), pr.base));
  for (size_t a = 0; a < n; ++a) {
    SuperPolynomial left = canonical_bracket(b, coords[a], h);
    for (size_t c = 0; c < n; ++c)
      m[a][c] = canonical_bracket(b, left, coords[c]);
  }
  return m;
}

SuperPolynomial hamiltonian_from_bracket_matrix(
    const BracketCarrier& b,
    const std::vector<std::vector<SuperPolynomial>>& target) {
  const auto& pairs = b.pairs();
  const size_t n = pairs.size();
  if (target.size() != n)
    throw DomainError("bracket matrix has wrong dimension");
  auto chart = b.chart();
  SuperPolynomial h = SuperPolynomial::zero(chart);
  auto residual = [&](size_t a, size_t c) {
    SuperPolynomial ua = SuperPolynomial::generator(chart, pairs[a].base);
    SuperPolynomial uc = SuperPolynomial::generator(chart, pairs[c].base);
    return target[a][c] - derived_bracket(b, h, ua, uc);
  };
  auto half = Rational(1, 2);
  for (size_t a = 0; a < n; ++a) {
    for (size_t c = a; c < n; ++c) {
      SuperPolynomial r = residual(a, c);
      if (r.is_zero()) continue;
      SuperPolynomial pa = SuperPolynomial::generator(chart, pairs[a].momentum);
      SuperPolynomial pc = SuperPolynomial::generator(chart, pairs[c].momentum);
      // split the needed entry into parity-homogeneous pieces; each pulls
      // back to a candidate term with a constant ratio
      SuperPolynomial r_even = (r + r.parity_map()) * half;
      SuperPolynomial r_odd = (r - r.parity_map()) * half;
      for (const SuperPolynomial* piece : {&r_even, &r_odd}) {
        if (piece->is_zero()) continue;
        SuperPolynomial cand = pa * (*piece) * pc;
        if (cand.is_zero())
          throw DomainError(
              "bracket matrix not realizable by a quadratic Hamiltonian");
        SuperPolynomial ua = SuperPolynomial::generator(chart, pairs[a].base);
        SuperPolynomial uc = SuperPolynomial::generator(chart, pairs[c].base);
        SuperPolynomial got = derived_bracket(b, cand, ua, uc);
        if (got.is_zero())
          throw DomainError(
              "bracket matrix not realizable by a quadratic Hamiltonian");
        // got must be an exact rational multiple of *piece
        const auto& [gm, gc] = *got.terms().begin();
        Rational pc_coeff = piece->coefficient(gm);
        if (pc_coeff == 0)
          throw DomainError(
              "bracket matrix not realizable by a quadratic Hamiltonian");
        Rational s = pc_coeff / gc;
        if (got * s != *piece)
          throw DomainError(
              "bracket matrix not realizable by a quadratic Hamiltonian");
        h = h + cand * s;
      }
    }
  }
  // exactness check, including graded-symmetry consistency of the input
  for (size_t a = 0; a < n; ++a)
    for (size_t c = 0; c < n; ++c)
      if (!residual(a, c).is_zero())
        throw DomainError(
            "bracket matrix is not the coordinate matrix of any quadratic "
            "Hamiltonian");
  return h;
}

}  // namespace gcalc
