#ifndef GCALC_CHART_HPP
#define GCALC_CHART_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcalc/errors.hpp"

namespace gcalc {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return Parity((uint8_t(a) + uint8_t(b)) & 1u);
}
inline int sign_of(Parity p) { return p == Parity::Odd ? -1 : 1; }

// Weight vector in Z^n; n is the chart's grading dimension.
using Weight = std::vector<long>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_scale(long k, const Weight& w);

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  Weight weight;            // length == chart grading dimension
  bool invertible = false;  // Laurent exponents permitted (even only)
};

// A darboux pair: indices of (base, momentum) generators.
struct DarbouxPair {
  uint32_t base = 0;
  uint32_t momentum = 0;
};

// Ordered graded coordinate system. Immutable after construction.
class Chart {
 public:
  // Validates: unique names, uniform weight length, no invertible odd
  // generator. Throws DomainError.
  static std::shared_ptr<const Chart> make(std::vector<Generator> gens,
                                           size_t grading_dim);
  static std::shared_ptr<const Chart> make(std::vector<Generator> gens,
                                           size_t grading_dim,
                                           std::optional<uint32_t> t_index);

  const std::vector<Generator>& generators() const { return gens_; }
  size_t size() const { return gens_.size(); }
  size_t grading_dim() const { return grading_dim_; }

  const Generator& gen(uint32_t i) const { return gens_[i]; }
  Parity parity(uint32_t i) const { return gens_[i].parity; }

  // Index lookup by name; throws DomainError if absent.
  uint32_t index_of(const std::string& name) const;
  std::optional<uint32_t> find(const std::string& name) const;

  const std::vector<DarbouxPair>& darboux_pairs() const { return pairs_; }
  std::optional<uint32_t> distinguished_t() const { return t_index_; }

  // Structural equality (generator lists, pairs, t marker).
  bool same_as(const Chart& other) const;

  size_t odd_count() const { return odd_count_; }

 private:
  Chart() = default;
  friend class ChartBuilder;

  std::vector<Generator> gens_;
  size_t grading_dim_ = 0;
  std::vector<DarbouxPair> pairs_;
  std::optional<uint32_t> t_index_;
  size_t odd_count_ = 0;
};

using ChartPtr = std::shared_ptr<const Chart>;

// Convenience: throws ChartMismatchError unless a and b are the same chart
// (pointer or structural equality).
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

// Chart constructions.
//
// cotangent_lift_chart: adds a momentum generator "p_<name>" for every
// generator. Momentum weight is (r, r - w^1, ..., r - w^n); base weights
// get a leading 0. Momentum parity equals the base parity, flipped when
// reverse_momentum_parity is set. Darboux pairs are recorded.
ChartPtr cotangent_lift_chart(const ChartPtr& c, long r,
                              bool reverse_momentum_parity);

// tangent_lift_chart: adds a fiber generator "d<name>" of weight (1, w)
// and parity equal to the base parity, flipped when reverse_fiber_parity
// is set (polynomials on the reversed lift are differential forms).
ChartPtr tangent_lift_chart(const ChartPtr& c, bool reverse_fiber_parity);

// extend_with_fiber: adjoins an invertible even generator "t" with weight
// (1, 0, ..., 0) in a new leading grading component, marked distinguished.
// Throws DomainError if the chart already carries a distinguished t.
ChartPtr extend_with_fiber(const ChartPtr& c);

}  // namespace gcalc

#endif
