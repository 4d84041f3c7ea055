// semicurve: command-line front end for the curve, Groebner and
// Ratliff-Rush checks. Exit codes: 0 ok, 1 user error, 2 internal error,
// 3 verified mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semicurve/errors.hpp"
#include "semicurve/survey.hpp"

namespace sc = semicurve;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kInternalError = 2;
constexpr int kMismatch = 3;

struct Common {
  bool json = false;
  std::optional<std::size_t> depth;
  std::string out;
};

void add_common(CLI::App* cmd, Common& common, bool with_depth) {
  cmd->add_flag("--json", common.json, "Emit JSON instead of text");
  cmd->add_option("--out", common.out, "Write output to FILE instead of stdout");
  if (with_depth) cmd->add_option("--depth", common.depth, "Probe depth (default 4 or SEMICURVE_RR_DEPTH)");
}

std::size_t depth_of(const Common& c) {
  const auto d = c.depth ? *c.depth : sc::default_depth();
  if (d == 0) throw sc::UserError("--depth must be at least 1");
  return d;
}

void write(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw sc::UserError("cannot open '" + c.out + "' for writing");
  f << text;
  if (!f) throw sc::UserError("failed writing '" + c.out + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

sc::CurveInstance valid_instance(const std::string& text) {
  auto c = sc::parse_instance(text);
  sc::require_valid(c);
  return c;
}

sc::MonomialIdeal parse_ideal_json(const std::string& text) {
  try {
    return json::parse(text).get<sc::MonomialIdeal>();
  } catch (const json::exception& e) {
    throw sc::UserError(std::string("bad --ideal JSON: ") + e.what());
  }
}

// inP of a curve, or a user-supplied ideal.
struct ProbeTarget {
  sc::MonomialIdeal ideal;
  bool from_curve = false;
};

ProbeTarget probe_target(const std::string& instance, const std::string& ideal) {
  if (!instance.empty() == !ideal.empty()) throw sc::UserError("give exactly one of INSTANCE or --ideal");
  if (!ideal.empty()) return {parse_ideal_json(ideal), false};
  const auto c = valid_instance(instance);
  const auto d = sc::derive(c);
  const auto order = c.order();
  std::vector<sc::Polynomial> basis;
  for (const auto& b : sc::curve_generators(c, d)) basis.push_back(sc::Polynomial::from_binomial(b, order));
  return {sc::leading_ideal(basis), true};
}

std::vector<std::size_t> parse_p_values(const std::string& s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto comma = s.find(',', pos);
    const auto part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw std::invalid_argument(part);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw sc::UserError("bad p value '" + part + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial curves over almost arithmetic sequences: generators, Groebner check, "
               "colon formulas and Ratliff-Rush probes"};
  app.require_subcommand(1);

  Common common;
  std::string instance;
  std::string ideal_text;
  std::string formula;
  std::string p_values = "1,2,3";
  sc::Integer max_mp = 25;
  sc::Integer max_mn = 25;
  std::string format = "text";
  std::size_t threads = 0;
  bool timings = false;

  auto* validate = app.add_subcommand("validate", "Check the hypotheses on an instance");
  auto* params = app.add_subcommand("params", "Derived parameters u, upsilon, w, z, lambda, mu, ...");
  auto* gens = app.add_subcommand("gens", "Generators phi, psi, theta, alpha of the defining ideal");
  auto* inideal = app.add_subcommand("inideal", "Leading ideal vs the closed-form inP");
  auto* gbverify = app.add_subcommand("gb-verify", "Buchberger criterion on the generators");
  auto* colon = app.add_subcommand("colon", "Closed-form colon lists vs the generic colon engine");
  auto* rr = app.add_subcommand("rr", "Ratliff-Rush chain I^{k+1} : I^k");
  auto* probe = app.add_subcommand("probe", "Socle-candidate probe with witness certification");
  auto* survey = app.add_subcommand("survey", "Run every check over a bounded corpus");

  for (auto* cmd : {validate, params, gens, inideal, gbverify, colon}) {
    cmd->add_option("instance", instance, "Instance m0,...,mp;mn")->required();
    add_common(cmd, common, cmd == colon);
  }
  colon->add_option("--formula", formula, "COLON_X1_TO_PM1, COLON_X1_TO_P, COLON_XN or SOCLE_RHO_CHI");
  for (auto* cmd : {rr, probe}) {
    cmd->add_option("instance", instance, "Instance m0,...,mp;mn (probes its inP)");
    cmd->add_option("--ideal", ideal_text, "Monomial ideal as JSON {\"arity\": k, \"gens\": [[...], ...]}");
    add_common(cmd, common, true);
  }
  survey->add_option("--p", p_values, "Comma-separated p values")->capture_default_str();
  survey->add_option("--max-mp", max_mp, "Largest m_p")->capture_default_str();
  survey->add_option("--max-mn", max_mn, "Largest m_n")->capture_default_str();
  survey->add_option("--format", format, "json, csv or text")->capture_default_str();
  survey->add_option("--threads", threads, "Worker threads (0 = all cores)");
  survey->add_flag("--timings", timings, "Include timings (output no longer reproducible)");
  add_common(survey, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (validate->parsed()) {
      const auto c = sc::parse_instance(instance);
      const auto report = sc::validate(c);
      if (common.json) {
        json j{{"instance", c}, {"valid", report.valid()}};
        if (!report.valid()) {
          j["failure"] = sc::to_string(*report.failure);
          j["message"] = report.message;
        }
        write(common, dump(j));
      } else {
        write(common, report.valid() ? "valid\n"
                                     : "invalid: " + std::string(sc::to_string(*report.failure)) + ": " +
                                           report.message + "\n");
      }
      return report.valid() ? kOk : kUserError;
    }

    if (params->parsed()) {
      const auto c = valid_instance(instance);
      const auto d = sc::derive(c);
      const auto check = sc::verify_lemma(c, d);
      if (common.json) {
        write(common, dump({{"instance", c},
                            {"params", d},
                            {"lemma",
                             {{"w_solutions", check.w_solutions},
                              {"z_solutions", check.z_solutions},
                              {"identity_lhs", check.identity_lhs},
                              {"identity_rhs", check.identity_rhs},
                              {"ok", check.ok()}}}}));
      } else {
        write(common, sc::params_table(c, d) + "\nlemma check: " + (check.ok() ? "ok" : "FAILED") + "\n");
      }
      return check.ok() ? kOk : kMismatch;
    }

    if (gens->parsed()) {
      const auto c = valid_instance(instance);
      const auto g = sc::curve_generators(c, sc::derive(c));
      if (common.json) {
        write(common, dump({{"instance", c}, {"generators", g}}));
      } else {
        std::string text;
        for (const auto& b : g) text += b.label + "  " + sc::to_string(b) + "\n";
        write(common, text);
      }
      return kOk;
    }

    if (inideal->parsed() || gbverify->parsed()) {
      const auto c = valid_instance(instance);
      const auto r = sc::run_instance(c, 1);
      const auto j = sc::to_json(r);
      if (inideal->parsed()) {
        if (common.json) {
          write(common, dump({{"instance", c}, {"in_ideal", j.at("in_ideal")}, {"errata", r.errata}}));
        } else {
          write(common, "computed:    " + sc::to_string(r.in_ideal.computed) + "\nclosed form: " +
                            sc::to_string(r.in_ideal.closed_form) + "\n" +
                            std::string(sc::to_string(r.in_ideal.match)) + "\n");
        }
        return r.in_ideal.match == sc::MatchStatus::Match ? kOk : kMismatch;
      }
      if (common.json) {
        write(common, dump({{"instance", c}, {"gb", j.at("gb")}}));
      } else {
        std::string text = r.gb.passed ? "passed" : "FAILED";
        text += " (" + std::to_string(r.gb.pairs_total) + " pairs, " + std::to_string(r.gb.pairs_skipped) +
                " skipped by the product criterion)\n";
        if (r.gb.failing_pair) text += "failing pair: " + *r.gb.failing_pair + "\n";
        write(common, text);
      }
      return r.gb.passed ? kOk : kMismatch;
    }

    if (colon->parsed()) {
      const auto c = valid_instance(instance);
      const auto r = sc::run_instance(c, depth_of(common));
      const auto j = sc::to_json(r);
      json rows = json::array();
      bool mismatch = false;
      std::string text;
      for (std::size_t i = 0; i < r.colon.size(); ++i) {
        const auto& cmp = r.colon[i];
        if (!formula.empty() && sc::to_string(cmp.selector) != formula) continue;
        mismatch |= cmp.match == sc::MatchStatus::Mismatch;
        rows.push_back(j.at("colon")[i]);
        std::string literal;
        for (const auto& m : cmp.literal) literal += (literal.empty() ? "" : ", ") + sc::to_string(m);
        text += std::string(sc::to_string(cmp.selector)) + "  " + std::string(sc::to_string(cmp.match)) + "  " +
                std::string(sc::to_string(cmp.guard)) + "\n  literal: {" + literal + "}\n";
        for (const auto& g : cmp.violated_guards) text += "  guard " + g + "\n";
        if (cmp.literal_agrees) text += std::string("  literal ") + (*cmp.literal_agrees ? "agrees" : "disagrees") +
                                        " with the engine\n";
      }
      if (rows.empty()) throw sc::UserError("unknown formula '" + formula + "'");
      write(common, common.json ? dump({{"instance", c}, {"colon", rows}, {"errata", r.errata}}) : text);
      return mismatch ? kMismatch : kOk;
    }

    if (rr->parsed() || probe->parsed()) {
      const auto target = probe_target(instance, ideal_text);
      const auto depth = depth_of(common);
      // Probes run on the ideal restricted to the variables it uses; results
      // are lifted back for display.
      const auto reduced = sc::reduce_variables(target.ideal);
      const std::size_t arity = target.ideal.arity();
      auto up = [&](const sc::Monomial& m) { return sc::lift(m, reduced, arity); };
      auto up_ideal = [&](const sc::MonomialIdeal& I) {
        std::vector<sc::Monomial> g;
        for (const auto& m : I.gens()) g.push_back(up(m));
        return sc::MonomialIdeal(arity, std::move(g));
      };

      auto chain = sc::rr_chain(reduced.ideal, depth);
      std::optional<sc::ProbeReport> pr;
      if (probe->parsed()) pr = sc::mainrr_probe(reduced.ideal, depth);

      std::optional<sc::Monomial> witness;
      std::size_t wdepth = 0;
      if (chain.witness) {
        witness = chain.witness;
        wdepth = *chain.witness_depth;
      } else if (pr && pr->witness) {
        witness = pr->witness;
        wdepth = *pr->witness_depth;
      }
      const bool certified = witness && sc::certify_witness(reduced.ideal, *witness, wdepth);

      for (auto& J : chain.chain) J = up_ideal(J);
      if (chain.witness) chain.witness = up(*chain.witness);
      if (pr) {
        for (auto& m : pr->candidates) m = up(m);
        if (pr->witness) pr->witness = up(*pr->witness);
      }
      if (witness) witness = up(*witness);

      auto j = sc::combined_report_json(chain, pr ? &*pr : nullptr);
      j["ideal"] = target.ideal;
      j["dropped_variables"] = reduced.dropped;
      if (witness) {
        j["witness_depth"] = wdepth;
        j["certified"] = certified;
      }
      const auto verdict = sc::verdict_from_string(j.at("verdict").get<std::string>());
      if (common.json) {
        write(common, dump(j));
      } else {
        std::string text = "ideal: " + sc::to_string(target.ideal) + "\n";
        for (std::size_t k = 1; k <= chain.depth; ++k) {
          text += "J_" + std::to_string(k) + " = " + sc::to_string(chain.chain[k - 1]) +
                  (chain.chain_equal[k - 1] ? "  (= I)" : "") + "\n";
        }
        if (pr) {
          text += "socle candidates:";
          for (const auto& m : pr->candidates) text += " " + sc::to_string(m);
          text += "\n";
        }
        text += "verdict: " + std::string(sc::to_string(verdict));
        if (witness) {
          text += ", witness " + sc::to_string(*witness) + " at k=" + std::to_string(wdepth) +
                  (certified ? " (certified)" : " (NOT certified)");
        } else if (verdict == sc::Verdict::ClosedEvidence) {
          text += " (no counterexample up to depth " + std::to_string(depth) + "; evidence, not proof)";
        }
        write(common, text + "\n");
      }
      if (witness && !certified) {
        throw sc::InternalError("witness " + sc::to_string(*witness) + " failed certification");
      }
      return target.from_curve && verdict != sc::Verdict::ClosedEvidence ? kMismatch : kOk;
    }

    if (survey->parsed()) {
      const sc::SurveyBounds bounds{parse_p_values(p_values), max_mp, max_mn};
      const auto fmt = common.json ? sc::Format::Json : sc::parse_format(format);
      const auto report = sc::survey(bounds, depth_of(common), threads);
      if (report.total() > 0 && report.case2 == 0) {
        std::cerr << "warning: no CASE2 instance within these bounds; widen them to exercise the Case 2 lists\n";
      }
      write(common, sc::emit(report, fmt, {timings}));
      return report.exit_code();
    }
  } catch (const sc::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const sc::UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}
