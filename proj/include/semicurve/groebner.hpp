#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

#include "semicurve/curve_ideal.hpp"
#include "semicurve/monomial.hpp"
#include "semicurve/monomial_ideal.hpp"
#include "semicurve/order.hpp"

namespace semicurve {

using Rational = boost::multiprecision::cpp_rational;

struct Term {
  Monomial monomial;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept in
/// descending order under the order the polynomial was built with; every
/// operation taking an order must be given that same order.
class Polynomial {
 public:
  Polynomial() = default;
  /// Combines like terms, drops zeros and sorts.
  Polynomial(std::vector<Term> terms, const WeightedGrevlexOrder& order);

  static Polynomial from_binomial(const Binomial& b, const WeightedGrevlexOrder& order);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }

  /// this += coef * shift * other.
  void add_scaled(const Polynomial& other, const Rational& coef, const Monomial& shift,
                  const WeightedGrevlexOrder& order);

  Polynomial scaled(const Rational& coef) const;

  /// Removes and returns the leading term.
  Term take_leading();

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

std::string to_string(const Polynomial& f);
/// `[{"coef": "p/q", "exp": [...]}, ...]` in the polynomial's term order.
void to_json(nlohmann::json& j, const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j, const WeightedGrevlexOrder& order);

struct ReductionStats {
  /// Largest number of terms the running dividend reached.
  std::size_t max_terms = 0;
};

/// Normal form of f modulo G. Each step divides by the first element of G
/// whose leading monomial divides the current leading term, so results are
/// deterministic for a fixed G.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const WeightedGrevlexOrder& order, ReductionStats* stats = nullptr);

Polynomial s_poly(const Polynomial& f, const Polynomial& g, const WeightedGrevlexOrder& order);

struct GbVerifyOptions {
  /// Skip pairs with coprime leading monomials.
  bool product_criterion = true;
};

struct FailingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial remainder;
};

struct GbReport {
  bool passed = true;
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped = 0;
  std::size_t max_terms = 0;
  std::optional<FailingPair> failing_pair;
};

/// Buchberger's criterion: every S-pair reduces to zero modulo G. Stops at
/// the first failing pair.
GbReport gb_verify(const std::vector<Polynomial>& basis, const WeightedGrevlexOrder& order,
                   GbVerifyOptions options = {});

MonomialIdeal leading_ideal(const std::vector<Polynomial>& basis);

/// Plain Buchberger completion: appends nonzero S-pair remainders until
/// every pair reduces to zero.
std::vector<Polynomial> buchberger_complete(std::vector<Polynomial> basis,
                                            const WeightedGrevlexOrder& order);

}  // namespace semicurve
