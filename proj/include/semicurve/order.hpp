#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "semicurve/monomial.hpp"

namespace semicurve {

using Weight = std::uint32_t;

/// Graded reverse lexicographic order with grading wt(x_i) = weights[i]
/// and variable order x0 < x1 < ... < x_n.
///
/// Monomials are compared by weighted degree first. On a tie, the monomial
/// with the smaller exponent at the lowest-indexed differing variable is the
/// larger one.
class WeightedGrevlexOrder {
 public:
  /// Throws UserError if `weights` is empty or contains a zero.
  explicit WeightedGrevlexOrder(std::vector<Weight> weights);

  /// Standard (unweighted) grevlex on `arity` variables.
  static WeightedGrevlexOrder standard(std::size_t arity);

  std::size_t arity() const { return weights_.size(); }
  std::span<const Weight> weights() const { return weights_; }

  /// Sum of e_i * w_i. Throws std::overflow_error past 64 bits.
  std::uint64_t weighted_degree(const Monomial& m) const;

  /// Throws UserError on arity mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::vector<Weight> weights_;
};

}  // namespace semicurve
