#include "gcalc/chart.hpp"

#include <algorithm>
#include <set>

namespace gcalc {

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw DomainError("weight vectors of different grading dimension");
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_scale(long k, const Weight& w) {
  Weight r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = k * w[i];
  return r;
}

class ChartBuilder {
 public:
  static ChartPtr build(std::vector<Generator> gens, size_t grading_dim,
                        std::vector<DarbouxPair> pairs,
                        std::optional<uint32_t> t_index) {
    std::shared_ptr<Chart> c(new Chart());
    std::set<std::string> names;
    size_t odd = 0;
    for (const auto& g : gens) {
      if (g.name.empty()) throw DomainError("generator with empty name");
      if (!names.insert(g.name).second)
        throw DomainError("duplicate generator name: " + g.name);
      if (g.weight.size() != grading_dim)
        throw DomainError("generator " + g.name +
                          " has weight of wrong grading dimension");
      if (g.invertible && g.parity == Parity::Odd)
        throw DomainError("odd generator " + g.name +
                          " cannot be invertible (odd generators are "
                          "nilpotent)");
      if (g.parity == Parity::Odd) ++odd;
    }
    for (const auto& p : pairs) {
      if (p.base >= gens.size() || p.momentum >= gens.size())
        throw DomainError("darboux pair index out of range");
    }
    if (t_index && *t_index >= gens.size())
      throw DomainError("distinguished t index out of range");
    c->gens_ = std::move(gens);
    c->grading_dim_ = grading_dim;
    c->pairs_ = std::move(pairs);
    c->t_index_ = t_index;
    c->odd_count_ = odd;
    return c;
  }
};

ChartPtr Chart::make(std::vector<Generator> gens, size_t grading_dim) {
  return ChartBuilder::build(std::move(gens), grading_dim, {}, std::nullopt);
}

ChartPtr Chart::make(std::vector<Generator> gens, size_t grading_dim,
                     std::optional<uint32_t> t_index) {
  return ChartBuilder::build(std::move(gens), grading_dim, {}, t_index);
}

uint32_t Chart::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw DomainError("unknown generator: " + name);
  return *i;
}

std::optional<uint32_t> Chart::find(const std::string& name) const {
  for (uint32_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

bool Chart::same_as(const Chart& other) const {
  if (grading_dim_ != other.grading_dim_) return false;
  if (gens_.size() != other.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i) {
    const auto& a = gens_[i];
    const auto& b = other.gens_[i];
    if (a.name != b.name || a.parity != b.parity || a.weight != b.weight ||
        a.invertible != b.invertible)
      return false;
  }
  if (pairs_.size() != other.pairs_.size()) return false;
  for (size_t i = 0; i < pairs_.size(); ++i)
    if (pairs_[i].base != other.pairs_[i].base ||
        pairs_[i].momentum != other.pairs_[i].momentum)
      return false;
  return t_index_ == other.t_index_;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return;
  if (a && b && a->same_as(*b)) return;
  throw ChartMismatchError("operands live on different charts");
}

namespace {
// "p_x", then "pp_x", ... until free of collisions with existing and newly
// created names
std::string fresh_fiber_name(const std::vector<Generator>& gens,
                             const std::string& prefix,
                             const std::string& base) {
  std::string head = prefix;
  while (true) {
    std::string cand = head + base;
    bool taken = false;
    for (const auto& g : gens)
      if (g.name == cand) {
        taken = true;
        break;
      }
    if (!taken) return cand;
    head = prefix.substr(0, 1) + head;
  }
}
}  // namespace

ChartPtr cotangent_lift_chart(const ChartPtr& c, long r,
                              bool reverse_momentum_parity) {
  if (r < 0) throw DomainError("phase lift weight r must be >= 0");
  const size_t n = c->grading_dim();
  std::vector<Generator> gens;
  gens.reserve(2 * c->size());
  for (const auto& g : c->generators()) {
    Generator b = g;
    Weight w(n + 1, 0);
    std::copy(g.weight.begin(), g.weight.end(), w.begin() + 1);
    b.weight = std::move(w);
    gens.push_back(std::move(b));
  }
  for (const auto& g : c->generators()) {
    Generator m;
    m.name = fresh_fiber_name(gens, "p_", g.name);
    m.parity = reverse_momentum_parity ? g.parity + Parity::Odd : g.parity;
    Weight w(n + 1);
    w[0] = r;
    for (size_t s = 0; s < n; ++s) w[s + 1] = r - g.weight[s];
    m.weight = std::move(w);
    m.invertible = false;
    gens.push_back(std::move(m));
  }
  std::vector<DarbouxPair> pairs;
  for (uint32_t i = 0; i < c->size(); ++i)
    pairs.push_back({i, uint32_t(c->size() + i)});
  return ChartBuilder::build(std::move(gens), n + 1, std::move(pairs),
                             c->distinguished_t());
}

ChartPtr tangent_lift_chart(const ChartPtr& c, bool reverse_fiber_parity) {
  const size_t n = c->grading_dim();
  std::vector<Generator> gens;
  gens.reserve(2 * c->size());
  for (const auto& g : c->generators()) {
    Generator b = g;
    Weight w(n + 1, 0);
    std::copy(g.weight.begin(), g.weight.end(), w.begin() + 1);
    b.weight = std::move(w);
    gens.push_back(std::move(b));
  }
  for (const auto& g : c->generators()) {
    Generator v;
    v.name = fresh_fiber_name(gens, "d", g.name);
    v.parity = reverse_fiber_parity ? g.parity + Parity::Odd : g.parity;
    Weight w(n + 1);
    w[0] = 1;
    std::copy(g.weight.begin(), g.weight.end(), w.begin() + 1);
    v.weight = std::move(w);
    v.invertible = false;
    gens.push_back(std::move(v));
  }
  // No symplectic pairing on a tangent lift.
  return ChartBuilder::build(std::move(gens), n + 1, {},
                             c->distinguished_t());
}

ChartPtr extend_with_fiber(const ChartPtr& c) {
  if (c->distinguished_t())
    throw DomainError("chart already carries a distinguished fiber t");
  if (c->find("t"))
    throw DomainError("generator name t already taken; cannot extend");
  const size_t n = c->grading_dim();
  std::vector<Generator> gens;
  gens.reserve(c->size() + 1);
  Generator t;
  t.name = "t";
  t.parity = Parity::Even;
  t.invertible = true;
  t.weight = Weight(n + 1, 0);
  t.weight[0] = 1;
  gens.push_back(std::move(t));
  for (const auto& g : c->generators()) {
    Generator b = g;
    Weight w(n + 1, 0);
    std::copy(g.weight.begin(), g.weight.end(), w.begin() + 1);
    b.weight = std::move(w);
    gens.push_back(std::move(b));
  }
  std::vector<DarbouxPair> pairs;
  for (const auto& p : c->darboux_pairs())
    pairs.push_back({p.base + 1, p.momentum + 1});
  return ChartBuilder::build(std::move(gens), n + 1, std::move(pairs),
                             uint32_t(0));
}

}  // namespace gcalc
