#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semicurve {

using Exponent = std::uint32_t;

/// A monomial x0^e0 * ... * x{k-1}^e{k-1} in a ring of fixed arity k.
///
/// Exponent arithmetic is checked: any result that does not fit in an
/// Exponent raises std::overflow_error instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial of the given arity.
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_unit() const;
  std::uint64_t total_degree() const;
  /// Number of variables with a positive exponent.
  std::size_t support_size() const;

  /// True iff this monomial divides `other` (componentwise <=).
  bool divides(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// Raw exponent-sequence comparison. This is NOT the monomial order used
  /// for leading terms; see WeightedGrevlexOrder.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Componentwise max.
Monomial lcm(const Monomial& a, const Monomial& b);
/// Componentwise min.
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): componentwise max(a_i - b_i, 0).
Monomial colon_quotient(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial exact_quotient(const Monomial& a, const Monomial& b);
/// Every positive exponent clamped to 1.
Monomial squarefree_part(const Monomial& a);
Monomial power(const Monomial& a, Exponent k);

/// Throws UserError unless the arities agree.
void require_same_arity(std::size_t a, std::size_t b, std::string_view context);

/// `x0^2*x3` style text; "1" for the unit. Exponent 1 is written bare.
std::string to_string(const Monomial& m);

/// Parses the text format. Accepts `x1^1` as well as `x1`, repeated
/// variables (exponents add) and surrounding whitespace. When `arity` is
/// zero the arity is inferred from the largest variable index.
Monomial parse_monomial(std::string_view text, std::size_t arity = 0);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace semicurve
