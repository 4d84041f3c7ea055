#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "semicurve/curve_ideal.hpp"
#include "semicurve/groebner.hpp"
#include "semicurve/monomial_ideal.hpp"
#include "semicurve/ratliff_rush.hpp"
#include "semicurve/semigroup.hpp"

namespace semicurve {

inline constexpr std::size_t kDefaultDepth = 4;

/// Depth from SEMICURVE_RR_DEPTH when set, else kDefaultDepth. Throws
/// UserError if the variable is set but not a positive integer.
std::size_t default_depth();

enum class MatchStatus { Match, Mismatch, Skipped };
enum class GuardStatus { GuardedMatchRequired, GuardViolatedInfo };

std::string_view to_string(MatchStatus m);
std::string_view to_string(GuardStatus g);

/// A literal closed-form colon list checked against the generic engine.
/// Equality is taken modulo inP: the engine's colon ideal must equal inP
/// plus the literal monomials.
struct ColonComparison {
  ClosedFormSelector selector = ClosedFormSelector::ColonX1ToPm1;
  GuardStatus guard = GuardStatus::GuardedMatchRequired;
  /// Human-readable reasons, each starting with the guard id (G1, G2, G3, NEG).
  std::vector<std::string> violated_guards;
  /// Skipped whenever a guard is violated.
  MatchStatus match = MatchStatus::Skipped;
  /// Whether the literal list agreed, also recorded for guard-violated
  /// formulas. Empty when the engine side is undefined (empty divisor).
  std::optional<bool> literal_agrees;
  std::vector<Monomial> literal;
  /// Engine generators outside inP + literal.
  std::vector<Monomial> engine_only;
  /// Literal monomials outside the engine's colon ideal.
  std::vector<Monomial> literal_only;
};

struct GbSummary {
  bool passed = false;
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped = 0;
  std::size_t max_terms = 0;
  /// Labels of the first failing pair, when any.
  std::optional<std::string> failing_pair;
};

struct InIdealCheck {
  MonomialIdeal computed;
  MonomialIdeal closed_form;
  MatchStatus match = MatchStatus::Skipped;
};

struct Timings {
  double derive_ms = 0;
  double groebner_ms = 0;
  double colon_ms = 0;
  double ratliff_rush_ms = 0;
};

struct InstanceReport {
  CurveInstance curve;
  DerivedParams params;
  bool lemma_ok = false;
  std::vector<Binomial> generators;
  /// Every generator lies in the kernel (weighted-homogeneous).
  bool kernel_ok = false;
  /// The order picked the displayed first term as lead for every generator.
  bool leads_as_displayed = false;
  GbSummary gb;
  InIdealCheck in_ideal;
  std::vector<ColonComparison> colon;
  /// Probes run on inP restricted to the variables it uses.
  std::vector<std::size_t> dropped_variables;
  RRChainReport rr;
  ProbeReport mainrr;
  /// The last colon of the chain lies in the radical of inP.
  bool chain_in_radical = false;
  std::vector<std::string> errata;
  Timings timings;

  /// True on a GB failure, an inP mismatch, a guarded colon mismatch, a
  /// failed generator invariant, or a NotClosed verdict.
  bool failed() const;
};

/// Runs validate -> derive -> generators -> GB check -> inP comparison ->
/// colon comparisons -> Ratliff-Rush chain and socle probe.
/// Throws UserError if the curve is invalid.
InstanceReport run_instance(const CurveInstance& curve, std::size_t depth);

struct SurveyBounds {
  std::vector<std::size_t> p_values;
  Integer max_mp = 0;
  Integer max_mn = 0;
};

/// Every candidate curve within the bounds, in enumeration order
/// (p, then m0, then common difference, then mn), valid or not.
std::vector<CurveInstance> enumerate_candidates(const SurveyBounds& bounds);

struct GuardStats {
  std::size_t guarded_match = 0;
  std::size_t guarded_mismatch = 0;
  std::size_t violated_agree = 0;
  std::size_t violated_disagree = 0;
  std::size_t not_applicable = 0;
};

struct SurveyReport {
  SurveyBounds bounds;
  std::size_t depth = 0;
  std::vector<InstanceReport> instances;
  /// Rejected candidates by validation failure name.
  std::map<std::string, std::size_t> rejected;
  std::size_t case1 = 0;
  std::size_t case2 = 0;
  std::map<std::string, std::size_t> checks_passed;
  std::map<std::string, std::size_t> checks_failed;
  std::map<std::string, GuardStats> guards;
  std::vector<std::string> errata;
  double wall_ms = 0;

  std::size_t total() const { return instances.size(); }
  std::size_t failed() const;
  /// 0 when every instance passed, 3 otherwise.
  int exit_code() const;
};

/// Runs every valid candidate, `threads` at a time (0 = hardware
/// concurrency). Output order is enumeration order regardless of threads.
SurveyReport survey(const SurveyBounds& bounds, std::size_t depth, std::size_t threads = 0);

/// Recomputes totals, check counts, guard statistics and the errata list
/// from `instances`.
void aggregate(SurveyReport& report);

enum class Format { Json, Csv, Text };

Format parse_format(std::string_view s);

struct EmitOptions {
  /// Timings break byte-for-byte reproducibility, so they are opt-in.
  bool include_timings = false;
};

std::string emit(const SurveyReport& report, Format format, EmitOptions options = {});

/// Fixed CSV header, one row per instance follows.
std::string_view csv_header();
std::string csv_row(const InstanceReport& r);
/// Parameter table plus check summary for one instance.
std::string to_text(const InstanceReport& r);
std::string params_table(const CurveInstance& c, const DerivedParams& d);

nlohmann::json to_json(const InstanceReport& r, EmitOptions options = {});
nlohmann::json to_json(const SurveyReport& r, EmitOptions options = {});
InstanceReport instance_report_from_json(const nlohmann::json& j);
SurveyReport survey_report_from_json(const nlohmann::json& j);

}  // namespace semicurve
