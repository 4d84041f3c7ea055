#include "semicurve/ratliff_rush.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

void require_proper(const MonomialIdeal& ideal, std::string_view op) {
  if (ideal.is_zero()) throw UserError(std::string(op) + ": the zero ideal is not allowed");
  if (ideal.is_unit()) throw UserError(std::string(op) + ": the unit ideal is not allowed");
}

std::optional<std::size_t> missing_pure_power(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return std::nullopt;
  for (std::size_t v = 0; v < ideal.arity(); ++v) {
    const bool has = std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) {
      return g[v] > 0 && g.support_size() == 1;
    });
    if (!has) return v;
  }
  return std::nullopt;
}

// Every product of k generators, with repetition, without minimalizing.
std::vector<Monomial> raw_products(const MonomialIdeal& ideal, std::size_t k) {
  std::unordered_set<Monomial, MonomialHash> seen;
  const auto& gens = ideal.gens();
  std::function<void(std::size_t, std::size_t, const Monomial&)> rec =
      [&](std::size_t start, std::size_t left, const Monomial& acc) {
        if (left == 0) {
          seen.insert(acc);
          return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) rec(i, left - 1, acc * gens[i]);
      };
  rec(0, k, Monomial(ideal.arity()));
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ClosedEvidence: return "CLOSED_EVIDENCE";
    case Verdict::NotClosed: return "NOT_CLOSED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "CLOSED_EVIDENCE") return Verdict::ClosedEvidence;
  if (s == "NOT_CLOSED") return Verdict::NotClosed;
  if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
  throw UserError("unknown verdict '" + std::string(s) + "'");
}

RRChainReport rr_chain(const MonomialIdeal& ideal, std::size_t depth) {
  require_proper(ideal, "rr_chain");
  if (depth == 0) throw UserError("rr_chain: depth must be at least 1");

  const auto pw = powers(ideal, depth + 1);
  RRChainReport report;
  report.depth = depth;
  for (std::size_t k = 1; k <= depth; ++k) {
    report.chain.push_back(colon(pw[k], pw[k - 1]));
    report.chain_equal.push_back(report.chain.back() == ideal);
  }

  internal_check(report.chain.front().contains(ideal), "rr_chain: I is not contained in I^2 : I");
  for (std::size_t k = 1; k < depth; ++k) {
    const bool up = report.chain[k].contains(report.chain[k - 1]);
    internal_check(up, "rr_chain: colon chain does not ascend at k = " + std::to_string(k));
    report.ascending.push_back(up);
    if (!report.stabilized_at && report.chain[k] == report.chain[k - 1]) report.stabilized_at = k;
  }

  report.verdict = Verdict::ClosedEvidence;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (report.chain_equal[k - 1]) continue;
    for (const auto& g : report.chain[k - 1].gens()) {
      if (!ideal.contains(g)) {
        report.verdict = Verdict::NotClosed;
        report.witness = g;
        report.witness_depth = k;
        break;
      }
    }
    break;
  }
  return report;
}

bool primary_to_max(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return false;
  return !missing_pure_power(ideal).has_value();
}

VariableReduction reduce_variables(const MonomialIdeal& ideal) {
  VariableReduction out{MonomialIdeal(1), {}, {}};
  for (std::size_t v = 0; v < ideal.arity(); ++v) {
    const bool used = std::any_of(ideal.gens().begin(), ideal.gens().end(),
                                  [&](const Monomial& g) { return g[v] > 0; });
    (used ? out.kept : out.dropped).push_back(v);
  }
  if (out.kept.empty()) {
    out.kept.push_back(0);
    out.dropped.erase(out.dropped.begin());
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Exponent> e;
    for (std::size_t v : out.kept) e.push_back(g[v]);
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(out.kept.size(), std::move(gens));
  return out;
}

Monomial lift(const Monomial& m, const VariableReduction& reduction, std::size_t arity) {
  require_same_arity(m.arity(), reduction.kept.size(), "lift");
  std::vector<Exponent> e(arity, 0);
  for (std::size_t i = 0; i < reduction.kept.size(); ++i) e[reduction.kept[i]] = m[i];
  return Monomial(std::move(e));
}

std::vector<Monomial> socle_complement(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw UserError("socle_complement: the zero ideal is not primary");
  if (const auto v = missing_pure_power(ideal)) {
    throw UserError("socle_complement: ideal is not primary to the maximal ideal; no pure power of x" +
                    std::to_string(*v));
  }
  std::vector<std::size_t> all(ideal.arity());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto socle = colon(ideal, MonomialIdeal::variables(ideal.arity(), all));
  std::vector<Monomial> out;
  for (const auto& g : socle.gens()) {
    if (!ideal.contains(g)) out.push_back(g);
  }
  return out;
}

ProbeReport mainrr_probe(const MonomialIdeal& ideal, std::size_t depth) {
  if (depth == 0) throw UserError("mainrr_probe: depth must be at least 1");
  ProbeReport report;
  report.depth = depth;
  report.candidates = socle_complement(ideal);
  const auto pw = powers(ideal, depth + 1);
  report.verdict = Verdict::ClosedEvidence;
  for (const auto& c : report.candidates) {
    std::vector<bool> row;
    for (std::size_t k = 1; k <= depth; ++k) {
      row.push_back(multiplies_into(c, pw[k - 1], pw[k]));
      if (row.back() && (!report.witness_depth || k < *report.witness_depth)) {
        report.verdict = Verdict::NotClosed;
        report.witness = c;
        report.witness_depth = k;
      }
    }
    report.membership.push_back(std::move(row));
  }
  return report;
}

bool certify_witness(const MonomialIdeal& ideal, const Monomial& witness, std::size_t k) {
  require_same_arity(ideal.arity(), witness.arity(), "certify_witness");
  if (k == 0) throw UserError("certify_witness: k must be at least 1");
  for (const auto& g : ideal.gens()) {
    if (g.divides(witness)) return false;
  }
  const auto lower = raw_products(ideal, k);
  const auto upper = raw_products(ideal, k + 1);
  return std::all_of(lower.begin(), lower.end(), [&](const Monomial& a) {
    const Monomial target = witness * a;
    return std::any_of(upper.begin(), upper.end(), [&](const Monomial& b) { return b.divides(target); });
  });
}

void to_json(nlohmann::json& j, const RRChainReport& r) {
  j = nlohmann::json{{"depth", r.depth},
                     {"chain", r.chain},
                     {"chain_equal", r.chain_equal},
                     {"ascending", r.ascending},
                     {"verdict", to_string(r.verdict)}};
  j["stabilized_at"] = r.stabilized_at ? nlohmann::json(*r.stabilized_at) : nlohmann::json(nullptr);
  if (r.witness) {
    j["witness"] = *r.witness;
    j["witness_depth"] = *r.witness_depth;
  }
}

void to_json(nlohmann::json& j, const ProbeReport& r) {
  j = nlohmann::json{{"depth", r.depth},
                     {"socle_candidates", r.candidates},
                     {"membership_table", r.membership},
                     {"verdict", to_string(r.verdict)}};
  if (r.witness) {
    j["witness"] = *r.witness;
    j["witness_depth"] = *r.witness_depth;
  }
}

namespace {

template <typename Report>
void read_witness(const nlohmann::json& j, Report& r) {
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.witness.reset();
  r.witness_depth.reset();
  if (j.contains("witness")) {
    r.witness = j.at("witness").get<Monomial>();
    r.witness_depth = j.at("witness_depth").get<std::size_t>();
  }
}

}  // namespace

void from_json(const nlohmann::json& j, RRChainReport& r) {
  r.depth = j.at("depth").get<std::size_t>();
  r.chain = j.at("chain").get<std::vector<MonomialIdeal>>();
  r.chain_equal = j.at("chain_equal").get<std::vector<bool>>();
  r.ascending = j.at("ascending").get<std::vector<bool>>();
  const auto& s = j.at("stabilized_at");
  r.stabilized_at = s.is_null() ? std::nullopt : std::optional<std::size_t>(s.get<std::size_t>());
  read_witness(j, r);
}

void from_json(const nlohmann::json& j, ProbeReport& r) {
  r.depth = j.at("depth").get<std::size_t>();
  r.candidates = j.at("socle_candidates").get<std::vector<Monomial>>();
  r.membership = j.at("membership_table").get<std::vector<std::vector<bool>>>();
  read_witness(j, r);
}

nlohmann::json combined_report_json(const RRChainReport& chain, const ProbeReport* probe) {
  nlohmann::json j{{"depth", chain.depth},
                   {"chain_equal", chain.chain_equal},
                   {"socle_candidates", nlohmann::json::array()},
                   {"membership_table", nlohmann::json::array()}};
  Verdict verdict = chain.verdict;
  std::optional<Monomial> witness = chain.witness;
  if (probe) {
    j["socle_candidates"] = probe->candidates;
    j["membership_table"] = probe->membership;
    if (probe->verdict == Verdict::NotClosed) {
      verdict = Verdict::NotClosed;
      if (!witness) witness = probe->witness;
    }
  }
  j["verdict"] = to_string(verdict);
  if (witness) j["witness"] = *witness;
  return j;
}

}  // namespace semicurve
