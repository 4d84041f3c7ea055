#include "semicurve/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("monomial exponent overflow");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("monomial exponent overflow");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view s, std::string_view context) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw UserError("bad number '" + std::string(s) + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw UserError("variable index out of range");
  Monomial m(arity);
  m.exps_[index] = power;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_arity(arity(), other.arity(), "monomial product");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return *this;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity(), "lcm");
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity(), "gcd");
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity(), "colon");
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(e));
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
  internal_check(b.divides(a), "exact_quotient: divisor does not divide");
  return colon_quotient(a, b);
}

Monomial squarefree_part(const Monomial& a) {
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial power(const Monomial& a, Exponent k) {
  std::vector<Exponent> e(a.arity());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(a[i], k);
  return Monomial(std::move(e));
}

void require_same_arity(std::size_t a, std::size_t b, std::string_view context) {
  if (a != b) {
    throw UserError("arity mismatch in " + std::string(context) + ": " + std::to_string(a) +
                    " vs " + std::to_string(b));
  }
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (m[i] != 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t arity) {
  const std::string context = "monomial '" + std::string(text) + "'";
  std::string_view body = trim(text);
  if (body.empty()) throw UserError("empty " + context);

  std::vector<std::pair<std::size_t, Exponent>> factors;
  if (body != "1") {
    while (true) {
      const auto star = body.find('*');
      std::string_view factor = trim(body.substr(0, star));
      if (factor.size() < 2 || factor.front() != 'x') throw UserError("bad factor in " + context);
      factor.remove_prefix(1);
      const auto caret = factor.find('^');
      const auto index = parse_number<std::size_t>(trim(factor.substr(0, caret)), context);
      Exponent e = 1;
      if (caret != std::string_view::npos) {
        e = parse_number<Exponent>(trim(factor.substr(caret + 1)), context);
      }
      factors.emplace_back(index, e);
      if (star == std::string_view::npos) break;
      body.remove_prefix(star + 1);
    }
  }

  std::size_t needed = 0;
  for (const auto& [index, e] : factors) needed = std::max(needed, index + 1);
  if (arity == 0) arity = std::max<std::size_t>(needed, 1);
  if (needed > arity) throw UserError("variable index exceeds arity in " + context);

  std::vector<Exponent> exps(arity, 0);
  for (const auto& [index, e] : factors) exps[index] = checked_add(exps[index], e);
  return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace semicurve
