#include "semicurve/monomial_ideal.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

// Descending standard grevlex; a total order, so ties cannot occur between
// distinct monomials.
bool canonical_before(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw UserError("ideal arity must be positive");
}

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(arity, std::move(gens))) {}

MonomialIdeal MonomialIdeal::unit(std::size_t arity) {
  return MonomialIdeal(arity, {Monomial(arity)});
}

MonomialIdeal MonomialIdeal::variables(std::size_t arity, const std::vector<std::size_t>& indices) {
  std::vector<Monomial> gens;
  gens.reserve(indices.size());
  for (std::size_t i : indices) gens.push_back(Monomial::variable(arity, i));
  return MonomialIdeal(arity, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_arity(arity_, m.arity(), "ideal membership");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_arity(arity_, other.arity_, "ideal containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens) {
  MonomialIdeal out(arity);
  for (const auto& g : gens) require_same_arity(arity, g.arity(), "ideal generator");

  // A divisor never has larger total degree, so scanning by increasing
  // degree lets each candidate be checked against kept generators only.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  for (auto& m : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), canonical_before);
  out.gens_ = std::move(kept);
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "ideal sum");
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.arity(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "ideal product");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(g * h);
  }
  return minimalize(a.arity(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::size_t k) {
  if (k == 0) return MonomialIdeal::unit(ideal.arity());
  return powers(ideal, k).back();
}

std::vector<MonomialIdeal> powers(const MonomialIdeal& ideal, std::size_t k) {
  std::vector<MonomialIdeal> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i == 0 ? ideal : product(out.back(), ideal));
  }
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "ideal intersection");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  }
  return minimalize(a.arity(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_arity(ideal.arity(), m.arity(), "colon");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(colon_quotient(g, m));
  return minimalize(ideal.arity(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_arity(ideal.arity(), by.arity(), "colon");
  if (by.is_zero()) throw UserError("colon by the zero ideal is undefined");
  MonomialIdeal acc = colon(ideal, by.gens().front());
  for (std::size_t i = 1; i < by.size() && !acc.is_zero(); ++i) {
    acc = intersect(acc, colon(ideal, by.gens()[i]));
  }
  return acc;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(squarefree_part(g));
  return minimalize(ideal.arity(), std::move(gens));
}

bool multiplies_into(const Monomial& m, const MonomialIdeal& by, const MonomialIdeal& into) {
  return std::all_of(by.gens().begin(), by.gens().end(),
                     [&](const Monomial& g) { return into.contains(m * g); });
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.gens()[i]);
  }
  return out + ")";
}

void to_json(nlohmann::json& j, const Monomial& m) {
  j = std::vector<Exponent>(m.exponents().begin(), m.exponents().end());
}

void from_json(const nlohmann::json& j, Monomial& m) {
  m = Monomial(j.get<std::vector<Exponent>>());
}

void to_json(nlohmann::json& j, const MonomialIdeal& ideal) {
  j = nlohmann::json{{"arity", ideal.arity()}, {"gens", ideal.gens()}};
}

void from_json(const nlohmann::json& j, MonomialIdeal& ideal) {
  try {
    const auto arity = j.at("arity").get<std::size_t>();
    ideal = MonomialIdeal(arity, j.at("gens").get<std::vector<Monomial>>());
  } catch (const nlohmann::json::exception& e) {
    throw UserError(std::string("bad ideal JSON: ") + e.what());
  }
}

}  // namespace semicurve
