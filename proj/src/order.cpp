#include "semicurve/order.hpp"

#include <algorithm>
#include <stdexcept>

#include "semicurve/errors.hpp"

namespace semicurve {

WeightedGrevlexOrder::WeightedGrevlexOrder(std::vector<Weight> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw UserError("monomial order needs at least one weight");
  if (std::any_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 0; })) {
    throw UserError("monomial order weights must be positive");
  }
}

WeightedGrevlexOrder WeightedGrevlexOrder::standard(std::size_t arity) {
  return WeightedGrevlexOrder(std::vector<Weight>(arity, 1));
}

std::uint64_t WeightedGrevlexOrder::weighted_degree(const Monomial& m) const {
  require_same_arity(m.arity(), arity(), "weighted degree");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    std::uint64_t term;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(m[i]), weights_[i], &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw std::overflow_error("weighted degree overflow");
    }
  }
  return total;
}

std::strong_ordering WeightedGrevlexOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_arity(a.arity(), b.arity(), "order comparison");
  const auto da = weighted_degree(a);
  const auto db = weighted_degree(b);
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    // Reverse: a smaller exponent on a lower variable makes the monomial larger.
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace semicurve
