#include "semicurve/groebner.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

std::string rational_string(const Rational& c) {
  return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    const boost::multiprecision::cpp_int num(s.substr(0, slash));
    const boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw UserError("zero denominator in coefficient '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UserError*>(&e)) throw;
    throw UserError("bad coefficient '" + s + "'");
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms, const WeightedGrevlexOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coef += t.coef;
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::from_binomial(const Binomial& b, const WeightedGrevlexOrder& order) {
  return Polynomial({{b.lead, Rational(1)}, {b.tail, Rational(-1)}}, order);
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& coef, const Monomial& shift,
                            const WeightedGrevlexOrder& order) {
  if (coef == 0) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    Term shifted{b->monomial * shift, b->coef * coef};
    if (a == terms_.end()) {
      merged.push_back(std::move(shifted));
      ++b;
      continue;
    }
    const auto cmp = order.compare(a->monomial, shifted.monomial);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back(std::move(shifted));
      ++b;
    } else {
      Rational c = a->coef + shifted.coef;
      if (c != 0) merged.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Polynomial Polynomial::scaled(const Rational& coef) const {
  Polynomial out;
  if (coef == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coef *= coef;
  return out;
}

Term Polynomial::take_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& t = f.terms()[i];
    Rational c = t.coef;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    const bool unit_monomial = t.monomial.is_unit();
    if (c != 1 || unit_monomial) {
      out += boost::multiprecision::denominator(c) == 1 ? boost::multiprecision::numerator(c).str()
                                                        : rational_string(c);
      if (!unit_monomial) out += "*";
    }
    if (!unit_monomial) out += to_string(t.monomial);
  }
  return out;
}

void to_json(nlohmann::json& j, const Polynomial& f) {
  j = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    j.push_back({{"coef", rational_string(t.coef)}, {"exp", t.monomial}});
  }
}

Polynomial polynomial_from_json(const nlohmann::json& j, const WeightedGrevlexOrder& order) {
  std::vector<Term> terms;
  try {
    for (const auto& t : j) {
      terms.push_back({t.at("exp").get<Monomial>(), parse_rational(t.at("coef").get<std::string>())});
      require_same_arity(terms.back().monomial.arity(), order.arity(), "polynomial JSON");
    }
  } catch (const nlohmann::json::exception& e) {
    throw UserError(std::string("bad polynomial JSON: ") + e.what());
  }
  return Polynomial(std::move(terms), order);
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const WeightedGrevlexOrder& order, ReductionStats* stats) {
  for (const auto& g : basis) {
    if (g.is_zero()) throw UserError("reduce: basis contains the zero polynomial");
  }
  Polynomial p = f;
  std::vector<Term> remainder;
  std::size_t max_terms = p.size();
  while (!p.is_zero()) {
    const Term lead = p.leading();
    const auto divisor = std::find_if(basis.begin(), basis.end(), [&](const Polynomial& g) {
      return g.leading_monomial().divides(lead.monomial);
    });
    if (divisor == basis.end()) {
      remainder.push_back(p.take_leading());
    } else {
      const Rational coef = -lead.coef / divisor->leading().coef;
      p.add_scaled(*divisor, coef, exact_quotient(lead.monomial, divisor->leading_monomial()), order);
    }
    max_terms = std::max(max_terms, p.size());
  }
  if (stats) stats->max_terms = std::max(stats->max_terms, max_terms);
  return Polynomial(std::move(remainder), order);
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g, const WeightedGrevlexOrder& order) {
  if (f.is_zero() || g.is_zero()) throw UserError("s_poly of the zero polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial out;
  out.add_scaled(f, Rational(1) / f.leading().coef, exact_quotient(l, f.leading_monomial()), order);
  out.add_scaled(g, Rational(-1) / g.leading().coef, exact_quotient(l, g.leading_monomial()), order);
  return out;
}

GbReport gb_verify(const std::vector<Polynomial>& basis, const WeightedGrevlexOrder& order,
                   GbVerifyOptions options) {
  GbReport report;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) throw UserError("gb_verify: basis contains the zero polynomial");
    report.max_terms = std::max(report.max_terms, basis[i].size());
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      ++report.pairs_total;
      if (options.product_criterion &&
          gcd(basis[i].leading_monomial(), basis[j].leading_monomial()).is_unit()) {
        ++report.pairs_skipped;
        continue;
      }
      ReductionStats stats;
      const auto s = s_poly(basis[i], basis[j], order);
      stats.max_terms = s.size();
      auto rem = reduce(s, basis, order, &stats);
      report.max_terms = std::max(report.max_terms, stats.max_terms);
      if (!rem.is_zero()) {
        report.passed = false;
        report.failing_pair = FailingPair{i, j, std::move(rem)};
        return report;
      }
    }
  }
  return report;
}

MonomialIdeal leading_ideal(const std::vector<Polynomial>& basis) {
  if (basis.empty()) throw UserError("leading_ideal of an empty basis");
  std::vector<Monomial> leads;
  for (const auto& g : basis) {
    if (g.is_zero()) throw UserError("leading_ideal: basis contains the zero polynomial");
    leads.push_back(g.leading_monomial());
  }
  const std::size_t arity = leads.front().arity();
  return MonomialIdeal(arity, std::move(leads));
}

std::vector<Polynomial> buchberger_complete(std::vector<Polynomial> basis,
                                            const WeightedGrevlexOrder& order) {
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace_back(i, j);
  }
  while (!pending.empty()) {
    const auto [i, j] = pending.back();
    pending.pop_back();
    if (gcd(basis[i].leading_monomial(), basis[j].leading_monomial()).is_unit()) continue;
    auto rem = reduce(s_poly(basis[i], basis[j], order), basis, order);
    if (rem.is_zero()) continue;
    basis.push_back(rem.scaled(Rational(1) / rem.leading().coef));
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pending.emplace_back(m, k);
  }
  return basis;
}

}  // namespace semicurve
