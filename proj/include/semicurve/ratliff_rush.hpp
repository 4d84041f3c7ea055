#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semicurve/monomial.hpp"
#include "semicurve/monomial_ideal.hpp"

namespace semicurve {

/// Outcome of a finite Ratliff-Rush probe. ClosedEvidence means no
/// counterexample up to the probed depth; it is never a proof, since
/// I^{k+1}:I^k can agree with I for a while and then grow.
enum class Verdict { ClosedEvidence, NotClosed, Inconclusive };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct RRChainReport {
  std::size_t depth = 0;
  /// chain[k-1] = I^{k+1} : I^k.
  std::vector<MonomialIdeal> chain;
  /// chain[k-1] == I.
  std::vector<bool> chain_equal;
  /// ascending[k-1]: chain[k-1] is contained in chain[k] (size depth-1).
  std::vector<bool> ascending;
  /// First k with J_k == J_{k+1}, if any.
  std::optional<std::size_t> stabilized_at;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Monomial> witness;
  std::optional<std::size_t> witness_depth;
};

/// Computes J_k = I^{k+1} : I^k for k = 1..depth. NotClosed carries a
/// generator of some J_k outside I; any such element lies in the closure.
/// Throws UserError for the zero or unit ideal or depth 0, and InternalError
/// if I is not contained in J_1 or the chain fails to ascend.
RRChainReport rr_chain(const MonomialIdeal& ideal, std::size_t depth);

/// True iff every variable has a pure power in the ideal. The unit ideal
/// counts as primary (degenerate).
bool primary_to_max(const MonomialIdeal& ideal);

struct VariableReduction {
  MonomialIdeal ideal;
  /// Indices (in the original ring) of variables absent from every generator.
  std::vector<std::size_t> dropped;
  /// Original index of each surviving variable.
  std::vector<std::size_t> kept;
};

/// Restricts the ideal to the variables its generators actually use.
/// If no variable is used (zero or unit ideal) one variable is kept.
VariableReduction reduce_variables(const MonomialIdeal& ideal);

/// Inverse of reduce_variables on a monomial: re-embeds into the original
/// arity.
Monomial lift(const Monomial& m, const VariableReduction& reduction, std::size_t arity);

/// Minimal generators of I : (x_1, ..., x_k) (all variables) that lie
/// outside I. Throws UserError naming a variable without a pure power when
/// I is not primary to the maximal ideal.
std::vector<Monomial> socle_complement(const MonomialIdeal& ideal);

struct ProbeReport {
  std::size_t depth = 0;
  std::vector<Monomial> candidates;
  /// membership[c][k-1]: candidate c lies in I^{k+1} : I^k.
  std::vector<std::vector<bool>> membership;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Monomial> witness;
  std::optional<std::size_t> witness_depth;
};

/// Tests every socle-complement candidate c against c * I^k in I^{k+1} for
/// k = 1..depth. A primary ideal with no candidate in any J_k passes the
/// filter of the closedness criterion up to that depth.
ProbeReport mainrr_probe(const MonomialIdeal& ideal, std::size_t depth);

/// Re-checks a claimed witness by brute force: w not in I, and w times every
/// product of k generators of I (enumerated directly, without minimalizing)
/// is divisible by some product of k + 1 generators.
bool certify_witness(const MonomialIdeal& ideal, const Monomial& witness, std::size_t k);

void to_json(nlohmann::json& j, const RRChainReport& r);
void to_json(nlohmann::json& j, const ProbeReport& r);
void from_json(const nlohmann::json& j, RRChainReport& r);
void from_json(const nlohmann::json& j, ProbeReport& r);

/// `{"depth", "chain_equal", "verdict", "witness"?, "socle_candidates",
/// "membership_table"}`; the verdict is NotClosed if either part found a
/// witness.
nlohmann::json combined_report_json(const RRChainReport& chain, const ProbeReport* probe);

}  // namespace semicurve
