#include "semicurve/survey.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

constexpr std::array kColonSelectors{ClosedFormSelector::ColonX1ToPm1, ClosedFormSelector::ColonX1ToP,
                                     ClosedFormSelector::ColonXn, ClosedFormSelector::SocleRhoChi};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_monomials(const std::vector<Monomial>& ms) {
  std::vector<std::string> parts;
  for (const auto& m : ms) parts.push_back(to_string(m));
  return join(parts, ", ");
}

ClosedFormSelector selector_from_string(std::string_view s) {
  for (auto sel : kColonSelectors) {
    if (to_string(sel) == s) return sel;
  }
  throw UserError("unknown colon formula '" + std::string(s) + "'");
}

MatchStatus match_from_string(std::string_view s) {
  if (s == "MATCH") return MatchStatus::Match;
  if (s == "MISMATCH") return MatchStatus::Mismatch;
  if (s == "SKIPPED") return MatchStatus::Skipped;
  throw UserError("unknown match status '" + std::string(s) + "'");
}

GuardStatus guard_from_string(std::string_view s) {
  if (s == "GUARDED_MATCH_REQUIRED") return GuardStatus::GuardedMatchRequired;
  if (s == "GUARD_VIOLATED_INFO") return GuardStatus::GuardViolatedInfo;
  throw UserError("unknown guard status '" + std::string(s) + "'");
}

std::vector<std::string> violated_guards(const DerivedParams& d, const ClosedFormList& list) {
  std::vector<std::string> out;
  const Integer g1 = d.q - d.q_z - d.epsilon;
  if (g1 < 1) out.push_back("G1: q - q_z - eps = " + std::to_string(g1) + " < 1");
  if (d.q < 1) out.push_back("G2: q = " + std::to_string(d.q) + " < 1");
  for (const auto& row : list.rows) {
    if (row.active && row.empty_range()) {
      out.push_back("G3: row '" + row.label + "' has empty range [" + std::to_string(row.lo) + ", " +
                    std::to_string(row.hi) + "]");
    }
  }
  for (const auto& row : list.rows) {
    if (row.dropped_negative > 0) {
      out.push_back("NEG: row '" + row.label + "' dropped " + std::to_string(row.dropped_negative) +
                    " monomial(s) with a negative exponent");
    }
  }
  return out;
}

ColonComparison compare_colon(const CurveInstance& c, const DerivedParams& d, const MonomialIdeal& in_p,
                              ClosedFormSelector selector) {
  const std::size_t arity = c.n() + 1;
  const auto list = colon_closed_form(c, d, {selector, d.case_tag});
  ColonComparison cmp;
  cmp.selector = selector;
  cmp.literal = list.monomials;
  cmp.violated_guards = violated_guards(d, list);
  cmp.guard = cmp.violated_guards.empty() ? GuardStatus::GuardedMatchRequired : GuardStatus::GuardViolatedInfo;

  const auto divisor = colon_divisor_variables(c, selector);
  if (!divisor.empty()) {
    const auto engine = colon(in_p, MonomialIdeal::variables(arity, divisor));
    const auto predicted = sum(in_p, MonomialIdeal(arity, list.monomials));
    for (const auto& g : engine.gens()) {
      if (!predicted.contains(g)) cmp.engine_only.push_back(g);
    }
    for (const auto& m : list.monomials) {
      if (!engine.contains(m)) cmp.literal_only.push_back(m);
    }
    cmp.literal_agrees = engine == predicted;
  }
  if (cmp.guard == GuardStatus::GuardedMatchRequired) {
    internal_check(cmp.literal_agrees.has_value(), "guarded comparison with an empty divisor");
    cmp.match = *cmp.literal_agrees ? MatchStatus::Match : MatchStatus::Mismatch;
  }
  return cmp;
}

std::string colon_erratum(const ColonComparison& cmp) {
  std::string out(to_string(cmp.selector));
  if (cmp.match == MatchStatus::Mismatch) {
    out += ": MISMATCH under guards";
  } else if (cmp.match == MatchStatus::Match) {
    return {};
  } else {
    std::vector<std::string> ids;
    for (const auto& g : cmp.violated_guards) {
      const auto id = g.substr(0, g.find(':'));
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    out += ": guard " + join(ids, ",") + " violated, comparison informational";
    if (!cmp.literal_agrees) return out + "; engine side undefined (empty divisor)";
    out += *cmp.literal_agrees ? "; literal list agrees with engine" : "; literal list disagrees with engine";
  }
  if (!cmp.engine_only.empty()) out += "; engine-only: " + join_monomials(cmp.engine_only);
  if (!cmp.literal_only.empty()) out += "; literal-only: " + join_monomials(cmp.literal_only);
  return out;
}

InstanceReport run_checked(const CurveInstance& curve, std::size_t depth) {
  InstanceReport rep;
  rep.curve = curve;

  auto t0 = Clock::now();
  rep.params = derive(curve);
  rep.lemma_ok = verify_lemma(curve, rep.params).ok();
  rep.generators = curve_generators(curve, rep.params);
  const auto weights = curve.weights();
  rep.kernel_ok = std::all_of(rep.generators.begin(), rep.generators.end(),
                              [&](const Binomial& b) { return kernel_check(b, weights); });
  rep.leads_as_displayed = std::all_of(rep.generators.begin(), rep.generators.end(),
                                       [](const Binomial& b) { return b.lead_is_first_term; });
  rep.timings.derive_ms = elapsed_ms(t0);

  t0 = Clock::now();
  const auto order = curve.order();
  std::vector<Polynomial> basis;
  for (const auto& b : rep.generators) basis.push_back(Polynomial::from_binomial(b, order));
  const auto gb = gb_verify(basis, order);
  rep.gb = GbSummary{gb.passed, gb.pairs_total, gb.pairs_skipped, gb.max_terms, std::nullopt};
  if (gb.failing_pair) {
    rep.gb.failing_pair =
        rep.generators[gb.failing_pair->i].label + "," + rep.generators[gb.failing_pair->j].label;
  }
  internal_check(gb.max_terms <= 2, "S-pair reduction produced more than two terms");

  const auto closed = initial_closed_form(curve, rep.params);
  rep.errata = closed.errata;
  rep.in_ideal.computed = leading_ideal(basis);
  rep.in_ideal.closed_form = closed.ideal;
  rep.in_ideal.match =
      rep.in_ideal.computed == rep.in_ideal.closed_form ? MatchStatus::Match : MatchStatus::Mismatch;
  if (rep.in_ideal.match == MatchStatus::Mismatch) {
    rep.errata.push_back("IN_IDEAL: leading ideal " + to_string(rep.in_ideal.computed) +
                         " differs from closed form " + to_string(rep.in_ideal.closed_form));
  }
  rep.timings.groebner_ms = elapsed_ms(t0);

  t0 = Clock::now();
  for (auto sel : kColonSelectors) {
    rep.colon.push_back(compare_colon(curve, rep.params, rep.in_ideal.computed, sel));
    if (auto e = colon_erratum(rep.colon.back()); !e.empty()) rep.errata.push_back(std::move(e));
  }
  rep.timings.colon_ms = elapsed_ms(t0);

  t0 = Clock::now();
  const auto reduced = reduce_variables(rep.in_ideal.computed);
  rep.dropped_variables = reduced.dropped;
  rep.rr = rr_chain(reduced.ideal, depth);
  rep.chain_in_radical = radical(reduced.ideal).contains(rep.rr.chain.back());
  try {
    rep.mainrr = mainrr_probe(reduced.ideal, depth);
  } catch (const UserError& e) {
    rep.mainrr = ProbeReport{};
    rep.mainrr.depth = depth;
    rep.mainrr.verdict = Verdict::Inconclusive;
    rep.errata.push_back(std::string("socle probe skipped: ") + e.what());
  }
  rep.timings.ratliff_rush_ms = elapsed_ms(t0);
  return rep;
}

nlohmann::json to_json(const ColonComparison& c) {
  nlohmann::json j{{"formula", to_string(c.selector)},
                   {"guard", to_string(c.guard)},
                   {"violated_guards", c.violated_guards},
                   {"match", to_string(c.match)},
                   {"literal", c.literal},
                   {"engine_only", c.engine_only},
                   {"literal_only", c.literal_only}};
  j["literal_agrees"] = c.literal_agrees ? nlohmann::json(*c.literal_agrees) : nlohmann::json(nullptr);
  return j;
}

ColonComparison colon_from_json(const nlohmann::json& j) {
  ColonComparison c;
  c.selector = selector_from_string(j.at("formula").get<std::string>());
  c.guard = guard_from_string(j.at("guard").get<std::string>());
  c.violated_guards = j.at("violated_guards").get<std::vector<std::string>>();
  c.match = match_from_string(j.at("match").get<std::string>());
  c.literal = j.at("literal").get<std::vector<Monomial>>();
  c.engine_only = j.at("engine_only").get<std::vector<Monomial>>();
  c.literal_only = j.at("literal_only").get<std::vector<Monomial>>();
  if (!j.at("literal_agrees").is_null()) c.literal_agrees = j.at("literal_agrees").get<bool>();
  return c;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\";\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string match_label(const ColonComparison& c) {
  if (c.match != MatchStatus::Skipped) return std::string(to_string(c.match));
  std::vector<std::string> ids;
  for (const auto& g : c.violated_guards) {
    const auto id = g.substr(0, g.find(':'));
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return "SKIPPED(" + join(ids, "+") + ")";
}

std::string variable_list(const std::vector<std::size_t>& vars) {
  std::vector<std::string> parts;
  for (auto v : vars) parts.push_back("x" + std::to_string(v));
  return parts.empty() ? "none" : join(parts, ", ");
}

}  // namespace

std::size_t default_depth() {
  const char* env = std::getenv("SEMICURVE_RR_DEPTH");
  if (!env || !*env) return kDefaultDepth;
  const std::string_view s(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
    throw UserError("SEMICURVE_RR_DEPTH must be a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::string_view to_string(MatchStatus m) {
  switch (m) {
    case MatchStatus::Match: return "MATCH";
    case MatchStatus::Mismatch: return "MISMATCH";
    case MatchStatus::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

std::string_view to_string(GuardStatus g) {
  return g == GuardStatus::GuardedMatchRequired ? "GUARDED_MATCH_REQUIRED" : "GUARD_VIOLATED_INFO";
}

bool InstanceReport::failed() const {
  const bool colon_mismatch = std::any_of(colon.begin(), colon.end(), [](const ColonComparison& c) {
    return c.match == MatchStatus::Mismatch;
  });
  return !lemma_ok || !kernel_ok || !leads_as_displayed || !gb.passed ||
         in_ideal.match != MatchStatus::Match || colon_mismatch || !chain_in_radical ||
         rr.verdict != Verdict::ClosedEvidence || mainrr.verdict != Verdict::ClosedEvidence;
}

InstanceReport run_instance(const CurveInstance& curve, std::size_t depth) {
  require_valid(curve);
  if (depth == 0) throw UserError("depth must be at least 1");
  try {
    return run_checked(curve, depth);
  } catch (const InternalError& e) {
    throw InternalError(to_string(curve) + ": " + e.what());
  }
}

std::vector<CurveInstance> enumerate_candidates(const SurveyBounds& bounds) {
  auto ps = bounds.p_values;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  std::vector<CurveInstance> out;
  for (std::size_t p : ps) {
    if (p == 0) throw UserError("survey: p must be at least 1");
    const auto pi = static_cast<Integer>(p);
    for (Integer m0 = 1; m0 + pi <= bounds.max_mp; ++m0) {
      for (Integer d = 1; m0 + pi * d <= bounds.max_mp; ++d) {
        std::vector<Integer> arith;
        for (Integer i = 0; i <= pi; ++i) arith.push_back(m0 + i * d);
        for (Integer mn = 1; mn <= bounds.max_mn; ++mn) out.push_back(CurveInstance{arith, mn});
      }
    }
  }
  return out;
}

SurveyReport survey(const SurveyBounds& bounds, std::size_t depth, std::size_t threads) {
  if (depth == 0) throw UserError("depth must be at least 1");
  const auto start = Clock::now();
  SurveyReport report;
  report.bounds = bounds;
  report.depth = depth;

  std::vector<CurveInstance> valid;
  for (auto& c : enumerate_candidates(bounds)) {
    const auto v = validate(c);
    if (v.valid()) {
      valid.push_back(std::move(c));
    } else {
      ++report.rejected[std::string(to_string(*v.failure))];
    }
  }

  std::vector<InstanceReport> results(valid.size());
  std::vector<std::exception_ptr> errors(valid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < valid.size(); i = next++) {
      try {
        results[i] = run_instance(valid[i], depth);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(valid.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  report.instances = std::move(results);
  aggregate(report);
  report.wall_ms = elapsed_ms(start);
  return report;
}

void aggregate(SurveyReport& report) {
  report.case1 = report.case2 = 0;
  report.checks_passed.clear();
  report.checks_failed.clear();
  report.guards.clear();
  report.errata.clear();
  auto tally = [&](const std::string& name, bool ok) {
    ++(ok ? report.checks_passed : report.checks_failed)[name];
  };
  for (const auto& r : report.instances) {
    ++(r.params.case_tag == CaseTag::Case1 ? report.case1 : report.case2);
    tally("lemma", r.lemma_ok);
    tally("kernel", r.kernel_ok);
    tally("leads", r.leads_as_displayed);
    tally("gb", r.gb.passed);
    tally("in_ideal", r.in_ideal.match == MatchStatus::Match);
    tally("rr", r.rr.verdict == Verdict::ClosedEvidence);
    tally("mainrr", r.mainrr.verdict == Verdict::ClosedEvidence);
    tally("chain_radical", r.chain_in_radical);
    for (const auto& c : r.colon) {
      auto& g = report.guards[std::string(to_string(c.selector))];
      if (c.match == MatchStatus::Match) {
        ++g.guarded_match;
      } else if (c.match == MatchStatus::Mismatch) {
        ++g.guarded_mismatch;
      } else if (!c.literal_agrees) {
        ++g.not_applicable;
      } else {
        ++(*c.literal_agrees ? g.violated_agree : g.violated_disagree);
      }
    }
    for (const auto& e : r.errata) report.errata.push_back(to_string(r.curve) + ": " + e);
  }
  internal_check(report.case1 + report.case2 == report.total(), "case totals do not sum to the total");
}

std::size_t SurveyReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceReport& r) { return r.failed(); }));
}

int SurveyReport::exit_code() const { return failed() == 0 ? 0 : 3; }

Format parse_format(std::string_view s) {
  if (s == "json" || s == "JSON") return Format::Json;
  if (s == "csv" || s == "CSV") return Format::Csv;
  if (s == "text" || s == "TEXT") return Format::Text;
  throw UserError("unknown format '" + std::string(s) + "' (expected json, csv or text)");
}

std::string_view csv_header() {
  return "instance,p,case,u,upsilon,w,z,lambda,mu,q,r,q_z,r_z,epsilon,lemma_ok,gb_passed,in_ideal,"
         "colon_x1_to_pm1,colon_x1_to_p,colon_xn,socle_rho_chi,rr_verdict,mainrr_verdict,errata,failed";
}

std::string csv_row(const InstanceReport& r) {
  const auto& d = r.params;
  std::ostringstream os;
  os << csv_quote(to_string(r.curve)) << ',' << r.curve.p() << ',' << to_string(d.case_tag);
  for (Integer x : {d.u, d.v, d.w, d.z, d.lambda, d.mu, d.q, d.r, d.q_z, d.r_z, d.epsilon}) os << ',' << x;
  os << ',' << (r.lemma_ok ? "true" : "false") << ',' << (r.gb.passed ? "true" : "false") << ','
     << to_string(r.in_ideal.match);
  for (const auto& c : r.colon) os << ',' << match_label(c);
  os << ',' << to_string(r.rr.verdict) << ',' << to_string(r.mainrr.verdict) << ',' << r.errata.size() << ','
     << (r.failed() ? "true" : "false");
  return os.str();
}

std::string params_table(const CurveInstance& c, const DerivedParams& d) {
  (void)c;
  std::ostringstream os;
  os << "u=" << d.u << ", υ=" << d.v << ", w=" << d.w << ", λ=" << d.lambda << ", z=" << d.z << ", μ=" << d.mu
     << ", q=" << d.q << ", r=" << d.r << ", q_z=" << d.q_z << ", r_z=" << d.r_z << ", ε=" << d.epsilon << ", "
     << to_string(d.case_tag);
  return os.str();
}

std::string to_text(const InstanceReport& r) {
  std::ostringstream os;
  os << "instance " << to_string(r.curve) << " (p=" << r.curve.p() << ", n=" << r.curve.n() << ")\n";
  os << "parameters: " << params_table(r.curve, r.params) << "\n";
  os << "lemma check: " << (r.lemma_ok ? "ok" : "FAILED") << "\n";
  os << "generators:\n";
  for (const auto& b : r.generators) {
    os << "  " << b.label << "  " << to_string(b) << (b.lead_is_first_term ? "" : "  (terms swapped)") << "\n";
  }
  os << "kernel check: " << (r.kernel_ok ? "ok" : "FAILED") << "\n";
  os << "groebner basis: " << (r.gb.passed ? "passed" : "FAILED") << " (" << r.gb.pairs_total << " pairs, "
     << r.gb.pairs_skipped << " skipped by the product criterion)";
  if (r.gb.failing_pair) os << ", failing pair " << *r.gb.failing_pair;
  os << "\n";
  os << "inP: " << to_string(r.in_ideal.computed) << "  closed form " << to_string(r.in_ideal.match) << "\n";
  os << "colon comparisons:\n";
  for (const auto& c : r.colon) {
    os << "  " << to_string(c.selector) << "  " << match_label(c);
    if (c.match == MatchStatus::Skipped && c.literal_agrees) {
      os << (*c.literal_agrees ? "  literal agrees" : "  literal disagrees");
    }
    os << "\n";
  }
  os << "ratliff-rush chain on inP (dropped variables: " << variable_list(r.dropped_variables)
     << "): " << to_string(r.rr.verdict) << " up to depth " << r.rr.depth;
  if (r.rr.witness) os << ", witness " << to_string(*r.rr.witness) << " at k=" << *r.rr.witness_depth;
  os << "\n";
  os << "socle probe: " << r.mainrr.candidates.size() << " candidate(s) [" << join_monomials(r.mainrr.candidates)
     << "], " << to_string(r.mainrr.verdict);
  if (r.mainrr.witness) os << ", witness " << to_string(*r.mainrr.witness) << " at k=" << *r.mainrr.witness_depth;
  os << "\n";
  if (r.rr.verdict == Verdict::ClosedEvidence && r.mainrr.verdict == Verdict::ClosedEvidence) {
    os << "note: CLOSED_EVIDENCE is finite-depth evidence, not a proof of closedness\n";
  }
  if (!r.errata.empty()) {
    os << "errata:\n";
    for (const auto& e : r.errata) os << "  - " << e << "\n";
  }
  os << "status: " << (r.failed() ? "FAILED" : "ok") << "\n";
  return os.str();
}

nlohmann::json to_json(const InstanceReport& r, EmitOptions options) {
  nlohmann::json colon = nlohmann::json::array();
  for (const auto& c : r.colon) colon.push_back(to_json(c));
  nlohmann::json j{
      {"curve", r.curve},
      {"params", r.params},
      {"lemma_ok", r.lemma_ok},
      {"generators", r.generators},
      {"kernel_ok", r.kernel_ok},
      {"leads_as_displayed", r.leads_as_displayed},
      {"gb",
       {{"passed", r.gb.passed},
        {"pairs_total", r.gb.pairs_total},
        {"pairs_skipped", r.gb.pairs_skipped},
        {"max_terms", r.gb.max_terms},
        {"failing_pair", r.gb.failing_pair ? nlohmann::json(*r.gb.failing_pair) : nlohmann::json(nullptr)}}},
      {"in_ideal",
       {{"computed", r.in_ideal.computed},
        {"closed_form", r.in_ideal.closed_form},
        {"match", to_string(r.in_ideal.match)}}},
      {"colon", colon},
      {"dropped_variables", r.dropped_variables},
      {"rr", r.rr},
      {"mainrr", r.mainrr},
      {"chain_in_radical", r.chain_in_radical},
      {"errata", r.errata},
      {"failed", r.failed()},
  };
  if (options.include_timings) {
    j["timings_ms"] = {{"derive", r.timings.derive_ms},
                       {"groebner", r.timings.groebner_ms},
                       {"colon", r.timings.colon_ms},
                       {"ratliff_rush", r.timings.ratliff_rush_ms}};
  }
  return j;
}

InstanceReport instance_report_from_json(const nlohmann::json& j) {
  try {
    InstanceReport r;
    r.curve = j.at("curve").get<CurveInstance>();
    r.params = j.at("params").get<DerivedParams>();
    r.lemma_ok = j.at("lemma_ok").get<bool>();
    r.generators = j.at("generators").get<std::vector<Binomial>>();
    r.kernel_ok = j.at("kernel_ok").get<bool>();
    r.leads_as_displayed = j.at("leads_as_displayed").get<bool>();
    const auto& gb = j.at("gb");
    r.gb.passed = gb.at("passed").get<bool>();
    r.gb.pairs_total = gb.at("pairs_total").get<std::size_t>();
    r.gb.pairs_skipped = gb.at("pairs_skipped").get<std::size_t>();
    r.gb.max_terms = gb.at("max_terms").get<std::size_t>();
    if (!gb.at("failing_pair").is_null()) r.gb.failing_pair = gb.at("failing_pair").get<std::string>();
    const auto& in = j.at("in_ideal");
    r.in_ideal.computed = in.at("computed").get<MonomialIdeal>();
    r.in_ideal.closed_form = in.at("closed_form").get<MonomialIdeal>();
    r.in_ideal.match = match_from_string(in.at("match").get<std::string>());
    for (const auto& c : j.at("colon")) r.colon.push_back(colon_from_json(c));
    r.dropped_variables = j.at("dropped_variables").get<std::vector<std::size_t>>();
    r.rr = j.at("rr").get<RRChainReport>();
    r.mainrr = j.at("mainrr").get<ProbeReport>();
    r.chain_in_radical = j.at("chain_in_radical").get<bool>();
    r.errata = j.at("errata").get<std::vector<std::string>>();
    if (j.contains("timings_ms")) {
      const auto& t = j.at("timings_ms");
      r.timings = {t.at("derive").get<double>(), t.at("groebner").get<double>(), t.at("colon").get<double>(),
                   t.at("ratliff_rush").get<double>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UserError(std::string("bad instance report JSON: ") + e.what());
  }
}

nlohmann::json to_json(const SurveyReport& r, EmitOptions options) {
  nlohmann::json guards = nlohmann::json::object();
  for (const auto& [name, g] : r.guards) {
    guards[name] = {{"guarded_match", g.guarded_match},
                    {"guarded_mismatch", g.guarded_mismatch},
                    {"violated_agree", g.violated_agree},
                    {"violated_disagree", g.violated_disagree},
                    {"not_applicable", g.not_applicable}};
  }
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& i : r.instances) instances.push_back(to_json(i, options));
  nlohmann::json j{
      {"bounds", {{"p_values", r.bounds.p_values}, {"max_mp", r.bounds.max_mp}, {"max_mn", r.bounds.max_mn}}},
      {"depth", r.depth},
      {"totals",
       {{"instances", r.total()},
        {"CASE1", r.case1},
        {"CASE2", r.case2},
        {"failed", r.failed()},
        {"rejected", r.rejected}}},
      {"case2_covered", r.case2 > 0},
      {"checks", {{"passed", r.checks_passed}, {"failed", r.checks_failed}}},
      {"guards", guards},
      {"errata", r.errata},
      {"instances", instances},
  };
  if (options.include_timings) j["wall_ms"] = r.wall_ms;
  return j;
}

SurveyReport survey_report_from_json(const nlohmann::json& j) {
  try {
    SurveyReport r;
    const auto& b = j.at("bounds");
    r.bounds.p_values = b.at("p_values").get<std::vector<std::size_t>>();
    r.bounds.max_mp = b.at("max_mp").get<Integer>();
    r.bounds.max_mn = b.at("max_mn").get<Integer>();
    r.depth = j.at("depth").get<std::size_t>();
    r.rejected = j.at("totals").at("rejected").get<std::map<std::string, std::size_t>>();
    for (const auto& i : j.at("instances")) r.instances.push_back(instance_report_from_json(i));
    if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
    aggregate(r);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UserError(std::string("bad survey report JSON: ") + e.what());
  }
}

std::string emit(const SurveyReport& report, Format format, EmitOptions options) {
  switch (format) {
    case Format::Json:
      return to_json(report, options).dump(2) + "\n";
    case Format::Csv: {
      std::string out(csv_header());
      out += "\n";
      for (const auto& r : report.instances) out += csv_row(r) + "\n";
      return out;
    }
    case Format::Text: {
      std::ostringstream os;
      os << "survey p in {";
      for (std::size_t i = 0; i < report.bounds.p_values.size(); ++i) {
        os << (i ? "," : "") << report.bounds.p_values[i];
      }
      os << "}, m_p <= " << report.bounds.max_mp << ", m_n <= " << report.bounds.max_mn
         << ", depth " << report.depth << "\n";
      std::size_t rejected = 0;
      for (const auto& [_, k] : report.rejected) rejected += k;
      os << "instances: " << report.total() << " (CASE1 " << report.case1 << ", CASE2 " << report.case2
         << "), rejected candidates: " << rejected << ", failed: " << report.failed() << "\n";
      if (report.total() > 0 && report.case2 == 0) {
        os << "warning: no CASE2 instance within these bounds; widen them to exercise the Case 2 lists\n";
      }
      os << "checks:\n";
      std::vector<std::string> names;
      for (const auto& [n, _] : report.checks_passed) names.push_back(n);
      for (const auto& [n, _] : report.checks_failed) {
        if (!report.checks_passed.count(n)) names.push_back(n);
      }
      std::sort(names.begin(), names.end());
      for (const auto& n : names) {
        const auto pass = report.checks_passed.count(n) ? report.checks_passed.at(n) : 0;
        const auto fail = report.checks_failed.count(n) ? report.checks_failed.at(n) : 0;
        os << "  " << n << ": " << pass << " passed, " << fail << " failed\n";
      }
      os << "colon comparisons (guarded match / guarded mismatch / violated agree / violated disagree / n.a.):\n";
      for (const auto& [name, g] : report.guards) {
        os << "  " << name << ": " << g.guarded_match << " / " << g.guarded_mismatch << " / " << g.violated_agree
           << " / " << g.violated_disagree << " / " << g.not_applicable << "\n";
      }
      os << "errata entries: " << report.errata.size() << "\n";
      for (const auto& r : report.instances) {
        os << to_string(r.curve) << "  " << to_string(r.params.case_tag) << "  gb="
           << (r.gb.passed ? "ok" : "FAIL") << "  inP=" << to_string(r.in_ideal.match);
        for (const auto& c : r.colon) os << "  " << to_string(c.selector) << "=" << match_label(c);
        os << "  rr=" << to_string(r.rr.verdict) << "  mainrr=" << to_string(r.mainrr.verdict)
           << (r.failed() ? "  FAILED" : "") << "\n";
      }
      if (options.include_timings) os << "wall clock: " << report.wall_ms << " ms\n";
      return os.str();
    }
  }
  throw UserError("unknown format");
}

}  // namespace semicurve
