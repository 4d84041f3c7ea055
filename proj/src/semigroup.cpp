#include "semicurve/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <nlohmann/json.hpp>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

// Reachability tables beyond this many entries mean the input is far outside
// desk scale.
constexpr Integer kTableLimit = Integer{1} << 28;

Integer parse_integer(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  Integer value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UserError("bad integer '" + std::string(s) + "' in instance");
  }
  return value;
}

struct Solutions {
  std::size_t count = 0;
  Integer index = 0;
  Integer cofactor = 0;
};

// Solutions of target = cofactor * m0 + shift(index) for index in [0, hi],
// cofactor >= min_cofactor.
template <typename Shift>
Solutions scan(Integer target, Integer m0, Integer hi, Integer min_cofactor, Shift shift) {
  Solutions out;
  for (Integer i = 0; i <= hi; ++i) {
    const Integer rest = target - shift(i);
    if (rest % m0 != 0) continue;
    const Integer cofactor = rest / m0;
    if (cofactor < min_cofactor) continue;
    if (out.count == 0) {
      out.index = i;
      out.cofactor = cofactor;
    }
    ++out.count;
  }
  return out;
}

}  // namespace

SemigroupMembership::SemigroupMembership(std::vector<Integer> generators)
    : generators_(std::move(generators)), reachable_{true} {
  if (generators_.empty()) throw UserError("semigroup needs at least one generator");
  if (std::any_of(generators_.begin(), generators_.end(), [](Integer g) { return g <= 0; })) {
    throw UserError("semigroup generators must be positive");
  }
}

bool SemigroupMembership::contains(Integer x) {
  if (x < 0) return false;
  if (x >= static_cast<Integer>(reachable_.size())) {
    extend_to(std::max(x, 2 * static_cast<Integer>(reachable_.size())));
  }
  return reachable_[static_cast<std::size_t>(x)];
}

void SemigroupMembership::extend_to(Integer limit) {
  if (limit >= kTableLimit) throw UserError("semigroup membership query too large");
  const auto old_size = static_cast<Integer>(reachable_.size());
  reachable_.resize(static_cast<std::size_t>(limit + 1), false);
  for (Integer x = old_size; x <= limit; ++x) {
    for (Integer g : generators_) {
      if (g <= x && reachable_[static_cast<std::size_t>(x - g)]) {
        reachable_[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
}

bool member(std::span<const Integer> generators, Integer x) {
  SemigroupMembership m({generators.begin(), generators.end()});
  return m.contains(x);
}

std::vector<Integer> CurveInstance::sequence() const {
  std::vector<Integer> out = arith;
  out.push_back(extra);
  return out;
}

std::vector<Weight> CurveInstance::weights() const {
  std::vector<Weight> out;
  for (Integer m : sequence()) {
    if (m <= 0 || m > kMaxGenerator) throw UserError("instance value out of range: " + std::to_string(m));
    out.push_back(static_cast<Weight>(m));
  }
  return out;
}

std::string to_string(const CurveInstance& c) {
  std::string out;
  for (std::size_t i = 0; i < c.arith.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.arith[i]);
  }
  return out + ';' + std::to_string(c.extra);
}

CurveInstance parse_instance(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw UserError("instance must look like m0,...,mp;mn, got '" + std::string(text) + "'");
  }
  CurveInstance c;
  std::string_view head = text.substr(0, semi);
  while (true) {
    const auto comma = head.find(',');
    c.arith.push_back(parse_integer(head.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    head.remove_prefix(comma + 1);
  }
  c.extra = parse_integer(text.substr(semi + 1));
  return c;
}

void to_json(nlohmann::json& j, const CurveInstance& c) {
  j = nlohmann::json{{"arith", c.arith}, {"extra", c.extra}};
}

void from_json(const nlohmann::json& j, CurveInstance& c) {
  try {
    c.arith = j.at("arith").get<std::vector<Integer>>();
    c.extra = j.at("extra").get<Integer>();
  } catch (const nlohmann::json::exception& e) {
    throw UserError(std::string("bad instance JSON: ") + e.what());
  }
}

std::string_view to_string(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::TooShort: return "too_short";
    case ValidationFailure::NonPositive: return "non_positive";
    case ValidationFailure::TooLarge: return "too_large";
    case ValidationFailure::NotIncreasing: return "not_increasing";
    case ValidationFailure::NotArithmetic: return "not_arithmetic";
    case ValidationFailure::GcdNotOne: return "gcd_not_one";
    case ValidationFailure::NotMinimal: return "not_minimal";
  }
  return "unknown";
}

ValidationReport validate(const CurveInstance& c) {
  auto fail = [](ValidationFailure f, std::string msg) {
    return ValidationReport{f, std::move(msg)};
  };
  if (c.arith.size() < 2) {
    return fail(ValidationFailure::TooShort, "arithmetic part needs at least two terms (p >= 1)");
  }
  const auto seq = c.sequence();
  for (Integer m : seq) {
    if (m <= 0) return fail(ValidationFailure::NonPositive, "value " + std::to_string(m) + " is not positive");
    if (m > kMaxGenerator) {
      return fail(ValidationFailure::TooLarge, "value " + std::to_string(m) + " exceeds " +
                                                   std::to_string(kMaxGenerator));
    }
  }
  for (std::size_t i = 1; i < c.arith.size(); ++i) {
    if (c.arith[i] <= c.arith[i - 1]) {
      return fail(ValidationFailure::NotIncreasing,
                  "arithmetic part not strictly increasing at m" + std::to_string(i));
    }
  }
  const Integer d = c.arith[1] - c.arith[0];
  for (std::size_t i = 2; i < c.arith.size(); ++i) {
    if (c.arith[i] - c.arith[i - 1] != d) {
      return fail(ValidationFailure::NotArithmetic,
                  "difference at m" + std::to_string(i) + " is not " + std::to_string(d));
    }
  }
  Integer g = 0;
  for (Integer m : seq) g = std::gcd(g, m);
  if (g != 1) return fail(ValidationFailure::GcdNotOne, "gcd is " + std::to_string(g));

  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::vector<Integer> others;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (j != i) others.push_back(seq[j]);
    }
    if (member(others, seq[i])) {
      const std::string name = i + 1 == seq.size() ? "mn" : "m" + std::to_string(i);
      return fail(ValidationFailure::NotMinimal,
                  "not minimally generated: " + name + " = " + std::to_string(seq[i]) +
                      " lies in the semigroup of the others");
    }
  }
  return {};
}

void require_valid(const CurveInstance& c) {
  const auto report = validate(c);
  if (!report.valid()) {
    throw UserError("invalid instance " + to_string(c) + ": " + report.message);
  }
}

TDecomposition t_decompose(Integer t, Integer p) {
  if (t < 0 || p < 1) throw UserError("t_decompose needs t >= 0 and p >= 1");
  // q = ceil(t / p) - 1 keeps r in [1, p].
  const Integer q = (t + p - 1) / p - 1;
  return {q, t - q * p};
}

Integer ladder_value(const CurveInstance& c, Integer t) {
  const auto p = static_cast<Integer>(c.p());
  const auto [q, r] = t_decompose(t, p);
  return q * c.arith[static_cast<std::size_t>(p)] + c.arith[static_cast<std::size_t>(r)];
}

bool in_S(const CurveInstance& c, Integer gamma) {
  SemigroupMembership gamma_all(c.sequence());
  return gamma_all.contains(gamma) && !gamma_all.contains(gamma - c.arith.front());
}

std::string_view to_string(CaseTag tag) { return tag == CaseTag::Case1 ? "CASE1" : "CASE2"; }

void to_json(nlohmann::json& j, const DerivedParams& d) {
  j = nlohmann::json{{"u", d.u},     {"upsilon", d.v},  {"w", d.w},     {"z", d.z},
                     {"lambda", d.lambda}, {"mu", d.mu}, {"q", d.q},     {"r", d.r},
                     {"q_z", d.q_z}, {"r_z", d.r_z},    {"epsilon", d.epsilon},
                     {"case", to_string(d.case_tag)}};
}

void from_json(const nlohmann::json& j, DerivedParams& d) {
  j.at("u").get_to(d.u);
  j.at("upsilon").get_to(d.v);
  j.at("w").get_to(d.w);
  j.at("z").get_to(d.z);
  j.at("lambda").get_to(d.lambda);
  j.at("mu").get_to(d.mu);
  j.at("q").get_to(d.q);
  j.at("r").get_to(d.r);
  j.at("q_z").get_to(d.q_z);
  j.at("r_z").get_to(d.r_z);
  j.at("epsilon").get_to(d.epsilon);
  d.case_tag = j.at("case").get<std::string>() == "CASE2" ? CaseTag::Case2 : CaseTag::Case1;
}

DerivedParams derive(const CurveInstance& c) {
  const auto p = static_cast<Integer>(c.p());
  const Integer m0 = c.arith.front();
  const Integer mn = c.extra;
  SemigroupMembership gamma_all(c.sequence());
  SemigroupMembership gamma_arith(c.arith);

  DerivedParams d;

  const Integer u_cap = p * (m0 + mn) * 4;
  d.u = -1;
  for (Integer t = 0; t <= u_cap; ++t) {
    // g_t always lies in Gamma', so g_t leaves S exactly when g_t - m0 is in Gamma.
    if (gamma_all.contains(ladder_value(c, t) - m0)) {
      d.u = t;
      break;
    }
  }
  internal_check(d.u >= 0, "u not found below cap for " + to_string(c));

  d.v = -1;
  for (Integer b = 1; b <= m0; ++b) {
    if (gamma_arith.contains(b * mn)) {
      d.v = b;
      break;
    }
  }
  internal_check(d.v >= 1, "upsilon not found below m0 for " + to_string(c));

  const Integer g_u = ladder_value(c, d.u);
  const auto first = scan(g_u, m0, d.v - 1, 1, [&](Integer w) { return w * mn; });
  internal_check(first.count == 1, "(w, lambda) not unique for " + to_string(c));
  d.w = first.index;
  d.lambda = first.cofactor;

  const auto second = scan(d.v * mn, m0, d.u - 1, 0, [&](Integer z) { return ladder_value(c, z); });
  internal_check(second.count == 1, "(z, mu) not unique for " + to_string(c));
  d.z = second.index;
  d.mu = second.cofactor;

  const auto tu = t_decompose(d.u, p);
  d.q = tu.q;
  d.r = tu.r;
  const auto tz = t_decompose(d.z, p);
  d.q_z = tz.q;
  d.r_z = tz.r;

  const auto lemma = verify_lemma(c, d);
  internal_check(lemma.identity_lhs == lemma.identity_rhs,
                 "closing identity fails for " + to_string(c));

  d.epsilon = d.r > d.r_z ? 0 : 1;
  d.case_tag = (d.epsilon == 0 && d.q_z == 0) ? CaseTag::Case2 : CaseTag::Case1;
  return d;
}

LemmaCheck verify_lemma(const CurveInstance& c, const DerivedParams& d) {
  const auto p = static_cast<Integer>(c.p());
  const Integer m0 = c.arith.front();
  const Integer mn = c.extra;
  LemmaCheck out;
  out.w_solutions =
      scan(ladder_value(c, d.u), m0, d.v - 1, 1, [&](Integer w) { return w * mn; }).count;
  out.z_solutions =
      scan(d.v * mn, m0, d.u - 1, 0, [&](Integer z) { return ladder_value(c, z); }).count;
  out.identity_lhs = ladder_value(c, d.u - d.z) + (d.v - d.w) * mn;
  const Integer r_diff = t_decompose(d.u - d.z, p).r;
  out.identity_rhs = (r_diff < d.r ? d.lambda + d.mu + 1 : d.lambda + d.mu) * m0;
  return out;
}

}  // namespace semicurve
