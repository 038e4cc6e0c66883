#include "gcalc/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gcalc/errors.hpp"

namespace gcalc {

namespace {

// Number of pairs (a, b), a in first, b in second, with a > b: the odd
// transposition count when interleaving two ascending index sequences.
int interleave_inversions(const std::vector<uint32_t>& first,
                          const std::vector<uint32_t>& second) {
  int inv = 0;
  for (uint32_t b : second) {
    // count elements of `first` strictly greater than b
    auto it = std::upper_bound(first.begin(), first.end(), b);
    inv += int(first.end() - it);
  }
  return inv;
}

}  // namespace

int64_t Monomial::even_exponent(uint32_t idx) const {
  for (const auto& [i, e] : even_)
    if (i == idx) return e;
  return 0;
}

bool Monomial::has_odd(uint32_t idx) const {
  return std::binary_search(odd_.begin(), odd_.end(), idx);
}

long Monomial::total_degree() const {
  long d = long(odd_.size());
  for (const auto& [i, e] : even_) d += long(e);
  return d;
}

bool Monomial::operator<(const Monomial& o) const {
  long da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  // merged exponent walk by ascending generator index, larger power first
  size_t ea = 0, oa = 0, eb = 0, ob = 0;
  auto next = [](const Monomial& m, size_t& e, size_t& o,
                 uint32_t& idx) -> int64_t {
    uint32_t ei = e < m.even_.size() ? m.even_[e].first : UINT32_MAX;
    uint32_t oi = o < m.odd_.size() ? m.odd_[o] : UINT32_MAX;
    if (ei == UINT32_MAX && oi == UINT32_MAX) {
      idx = UINT32_MAX;
      return 0;
    }
    if (ei <= oi) {
      idx = ei;
      return m.even_[e++].second;
    }
    idx = oi;
    ++o;
    return 1;
  };
  while (true) {
    size_t sa = ea, soa = oa, sb = eb, sob = ob;
    uint32_t ia, ib;
    int64_t xa = next(*this, sa, soa, ia);
    int64_t xb = next(o, sb, sob, ib);
    if (ia == UINT32_MAX && ib == UINT32_MAX) return false;  // equal
    if (ia != ib) return ia < ib;  // earlier generator present => earlier term
    if (xa != xb) return xa > xb;
    ea = sa;
    oa = soa;
    eb = sb;
    ob = sob;
  }
}

Parity Monomial::parity(const Chart&) const {
  return (odd_.size() & 1) ? Parity::Odd : Parity::Even;
}

Weight Monomial::weight(const Chart& chart) const {
  Weight w(chart.grading_dim(), 0);
  for (const auto& [i, e] : even_)
    w = weight_add(w, weight_scale(e, chart.gen(i).weight));
  for (uint32_t i : odd_) w = weight_add(w, chart.gen(i).weight);
  return w;
}

Monomial MonomialBuilder::make(
    const Chart& chart,
    const std::vector<std::pair<uint32_t, int64_t>>& exps) {
  Monomial m;
  for (const auto& [i, e] : exps) {
    if (i >= chart.size()) throw DomainError("generator index out of range");
    if (e == 0) continue;
    if (chart.parity(i) == Parity::Odd) {
      if (e != 1)
        throw DomainError("odd generator exponent must be 0 or 1 here");
      m.odd_.push_back(i);
    } else {
      if (e < 0 && !chart.gen(i).invertible)
        throw DomainError("negative exponent on non-invertible generator " +
                          chart.gen(i).name);
      m.even_.push_back({i, e});
    }
  }
  std::sort(m.even_.begin(), m.even_.end());
  std::sort(m.odd_.begin(), m.odd_.end());
  return m;
}

SuperPolynomial SuperPolynomial::zero(ChartPtr chart) {
  return SuperPolynomial(std::move(chart));
}

SuperPolynomial SuperPolynomial::constant(ChartPtr chart, const Rational& c) {
  SuperPolynomial p(std::move(chart));
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

SuperPolynomial SuperPolynomial::generator(const ChartPtr& chart,
                                           uint32_t index) {
  return term(chart, Rational(1), {{index, 1}});
}

SuperPolynomial SuperPolynomial::generator(const ChartPtr& chart,
                                           const std::string& name) {
  return generator(chart, chart->index_of(name));
}

SuperPolynomial SuperPolynomial::term(
    const ChartPtr& chart, const Rational& coeff,
    const std::vector<std::pair<uint32_t, int64_t>>& exps) {
  SuperPolynomial p(chart);
  if (coeff == 0) return p;
  // Interpret exps as an ordered product; accumulate the Koszul sign of
  // sorting the odd factors and kill odd squares.
  std::vector<uint32_t> odd_seq;
  std::vector<std::pair<uint32_t, int64_t>> even_exps;
  for (const auto& [i, e] : exps) {
    if (i >= chart->size()) throw DomainError("generator index out of range");
    if (e == 0) continue;
    if (chart->parity(i) == Parity::Odd) {
      if (e < 0)
        throw DomainError("negative exponent on odd generator " +
                          chart->gen(i).name);
      if (e >= 2) return p;  // square of an odd generator is 0
      odd_seq.push_back(i);
    } else {
      even_exps.push_back({i, e});
    }
  }
  int inv = 0;
  for (size_t a = 0; a < odd_seq.size(); ++a)
    for (size_t b = a + 1; b < odd_seq.size(); ++b) {
      if (odd_seq[a] == odd_seq[b]) return p;  // repeated odd factor
      if (odd_seq[a] > odd_seq[b]) ++inv;
    }
  // merge duplicate even entries
  std::sort(even_exps.begin(), even_exps.end());
  std::vector<std::pair<uint32_t, int64_t>> merged;
  for (const auto& [i, e] : even_exps) {
    if (!merged.empty() && merged.back().first == i)
      merged.back().second += e;
    else
      merged.push_back({i, e});
  }
  std::erase_if(merged, [](const auto& p_) { return p_.second == 0; });
  for (const auto& [i, e] : merged)
    if (e < 0 && !chart->gen(i).invertible)
      throw DomainError("negative exponent on non-invertible generator " +
                        chart->gen(i).name);
  Monomial m;
  m.even_ = std::move(merged);
  m.odd_ = std::move(odd_seq);
  std::sort(m.odd_.begin(), m.odd_.end());
  Rational c = (inv & 1) ? Rational(-coeff) : coeff;
  p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
  if (is_zero() && o.is_zero()) return true;
  require_same_chart(chart_, o.chart_);
  return terms_ == o.terms_;
}

void SuperPolynomial::add_term(Monomial m, Rational c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(chart_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, Rational(-c));
  return r;
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  require_same_chart(chart_, o.chart_);
  SuperPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial& o) const {
  return *this + (-o);
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  require_same_chart(chart_, o.chart_);
  SuperPolynomial r(chart_ ? chart_ : o.chart_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      // odd part: zero on a repeated factor, Koszul sign from interleaving
      bool dead = false;
      for (uint32_t i : mb.odd_)
        if (ma.has_odd(i)) {
          dead = true;
          break;
        }
      if (dead) continue;
      int inv = interleave_inversions(ma.odd_, mb.odd_);
      Monomial m;
      m.odd_.resize(ma.odd_.size() + mb.odd_.size());
      std::merge(ma.odd_.begin(), ma.odd_.end(), mb.odd_.begin(),
                 mb.odd_.end(), m.odd_.begin());
      // even part: exponents add
      size_t ia = 0, ib = 0;
      while (ia < ma.even_.size() || ib < mb.even_.size()) {
        if (ib == mb.even_.size() ||
            (ia < ma.even_.size() &&
             ma.even_[ia].first < mb.even_[ib].first)) {
          m.even_.push_back(ma.even_[ia++]);
        } else if (ia == ma.even_.size() ||
                   mb.even_[ib].first < ma.even_[ia].first) {
          m.even_.push_back(mb.even_[ib++]);
        } else {
          int64_t e = ma.even_[ia].second + mb.even_[ib].second;
          if (e != 0) m.even_.push_back({ma.even_[ia].first, e});
          ++ia;
          ++ib;
        }
      }
      Rational c = ca * cb;
      if (inv & 1) c = -c;
      r.add_term(std::move(m), std::move(c));
    }
  }
  return r;
}

SuperPolynomial SuperPolynomial::operator*(const Rational& c) const {
  SuperPolynomial r(chart_);
  if (c == 0) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, Rational(co * c));
  return r;
}

SuperPolynomial SuperPolynomial::pow(long k) const {
  if (k < 0) {
    return unit_inverse().pow(-k);
  }
  SuperPolynomial r = constant(chart_, 1);
  SuperPolynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

SuperPolynomial SuperPolynomial::partial_left(uint32_t v) const {
  if (!chart_) return *this;
  if (v >= chart_->size()) throw DomainError("generator index out of range");
  SuperPolynomial r(chart_);
  const bool odd = chart_->parity(v) == Parity::Odd;
  for (const auto& [m, c] : terms_) {
    if (odd) {
      auto it = std::lower_bound(m.odd_.begin(), m.odd_.end(), v);
      if (it == m.odd_.end() || *it != v) continue;
      size_t pos = size_t(it - m.odd_.begin());
      Monomial d = m;
      d.odd_.erase(d.odd_.begin() + pos);
      Rational cc = (pos & 1) ? Rational(-c) : c;
      r.add_term(std::move(d), std::move(cc));
    } else {
      int64_t e = m.even_exponent(v);
      if (e == 0) continue;
      Monomial d = m;
      for (auto& [i, ex] : d.even_)
        if (i == v) ex -= 1;
      std::erase_if(d.even_, [](const auto& p) { return p.second == 0; });
      r.add_term(std::move(d), Rational(c * e));
    }
  }
  return r;
}

SuperPolynomial SuperPolynomial::partial_right(uint32_t v) const {
  if (!chart_) return *this;
  if (v >= chart_->size()) throw DomainError("generator index out of range");
  const bool odd = chart_->parity(v) == Parity::Odd;
  if (!odd) return partial_left(v);
  SuperPolynomial r(chart_);
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(m.odd_.begin(), m.odd_.end(), v);
    if (it == m.odd_.end() || *it != v) continue;
    size_t pos = size_t(it - m.odd_.begin());
    size_t after = m.odd_.size() - pos - 1;
    Monomial d = m;
    d.odd_.erase(d.odd_.begin() + pos);
    Rational cc = (after & 1) ? Rational(-c) : c;
    r.add_term(std::move(d), std::move(cc));
  }
  return r;
}

GradeInfo SuperPolynomial::grade() const {
  GradeInfo g;
  if (is_zero()) {
    g.is_zero = true;
    return g;
  }
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Parity p = m.parity(*chart_);
    Weight w = m.weight(*chart_);
    if (first) {
      g.parity = p == Parity::Odd ? ParityGrade::Odd : ParityGrade::Even;
      g.weight = std::move(w);
      first = false;
      continue;
    }
    ParityGrade pg = p == Parity::Odd ? ParityGrade::Odd : ParityGrade::Even;
    if (g.parity != ParityGrade::Mixed && pg != g.parity)
      g.parity = ParityGrade::Mixed;
    if (g.weight_homogeneous && w != g.weight) {
      g.weight_homogeneous = false;
      g.weight.clear();
    }
  }
  return g;
}

SuperPolynomial SuperPolynomial::parity_map() const {
  SuperPolynomial r(chart_);
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, (m.odd_.size() & 1) ? Rational(-c) : c);
  return r;
}

SuperPolynomial SuperPolynomial::body() const {
  SuperPolynomial r(chart_);
  for (const auto& [m, c] : terms_)
    if (m.odd_.empty()) r.terms_.emplace(m, c);
  return r;
}

SuperPolynomial SuperPolynomial::scale_generator(uint32_t v,
                                                 const Rational& c) const {
  if (c == 0) throw DomainError("scale_generator: zero scale");
  SuperPolynomial r(chart_);
  for (const auto& [m, co] : terms_) {
    int64_t e = chart_->parity(v) == Parity::Odd ? (m.has_odd(v) ? 1 : 0)
                                                 : m.even_exponent(v);
    Rational f = co;
    if (e > 0)
      for (int64_t k = 0; k < e; ++k) f *= c;
    else if (e < 0)
      for (int64_t k = 0; k < -e; ++k) f /= c;
    r.add_term(m, std::move(f));
  }
  return r;
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int64_t SuperPolynomial::degree_in(uint32_t v) const {
  int64_t d = 0;
  for (const auto& [m, c] : terms_) {
    int64_t e = chart_->parity(v) == Parity::Odd ? (m.has_odd(v) ? 1 : 0)
                                                 : m.even_exponent(v);
    d = std::max(d, e < 0 ? -e : e);
  }
  return d;
}

bool SuperPolynomial::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  if (!m.odd_.empty()) return false;
  for (const auto& [i, e] : m.even_)
    if (!chart_->gen(i).invertible) return false;
  return true;
}

SuperPolynomial SuperPolynomial::unit_inverse() const {
  if (!is_unit_monomial())
    throw DomainError("polynomial is not an invertible monomial");
  const auto& [m, c] = *terms_.begin();
  Monomial inv;
  for (const auto& [i, e] : m.even_) inv.even_.push_back({i, -e});
  SuperPolynomial r(chart_);
  r.terms_.emplace(std::move(inv), Rational(1 / c));
  return r;
}

std::string SuperPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::vector<std::string> factors;
    {
      size_t ie = 0, io = 0;
      while (ie < m.even_.size() || io < m.odd_.size()) {
        uint32_t ei = ie < m.even_.size() ? m.even_[ie].first : UINT32_MAX;
        uint32_t oi = io < m.odd_.size() ? m.odd_[io] : UINT32_MAX;
        if (ei <= oi) {
          const auto& [i, e] = m.even_[ie++];
          std::string f = chart_->gen(i).name;
          if (e != 1) f += "^" + std::to_string(e);
          factors.push_back(std::move(f));
        } else {
          factors.push_back(chart_->gen(m.odd_[io++]).name);
        }
      }
    }
    if (factors.empty()) {
      os << gcalc::to_string(a);
    } else {
      if (a != 1) os << gcalc::to_string(a) << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

SuperPolynomial make_term(
    const ChartPtr& chart, const Rational& coeff,
    const std::vector<std::pair<std::string, int64_t>>& factors) {
  std::vector<std::pair<uint32_t, int64_t>> exps;
  exps.reserve(factors.size());
  for (const auto& [n, e] : factors) exps.push_back({chart->index_of(n), e});
  return SuperPolynomial::term(chart, coeff, exps);
}

std::string to_string(const SuperPolynomial& p) { return p.to_string(); }

}  // namespace gcalc
