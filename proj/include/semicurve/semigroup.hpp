#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semicurve/order.hpp"

namespace semicurve {

using Integer = std::int64_t;

/// Membership oracle for the additive monoid generated by a set of positive
/// integers. Keeps a reachability table that grows by doubling on demand.
/// Not thread-safe; use one instance per thread.
class SemigroupMembership {
 public:
  /// Throws UserError on an empty set or a non-positive generator.
  explicit SemigroupMembership(std::vector<Integer> generators);

  /// Negative values are never members; 0 always is.
  bool contains(Integer x);

  const std::vector<Integer>& generators() const { return generators_; }

 private:
  void extend_to(Integer limit);

  std::vector<Integer> generators_;
  std::vector<bool> reachable_;
};

/// One-shot membership test.
bool member(std::span<const Integer> generators, Integer x);

/// An almost arithmetic sequence in normal form: m0 < ... < mp in
/// arithmetic progression plus an arbitrary extra generator mn, n = p + 1.
struct CurveInstance {
  std::vector<Integer> arith;
  Integer extra = 0;

  std::size_t p() const { return arith.size() - 1; }
  /// Index of the extra variable x_n.
  std::size_t n() const { return arith.size(); }
  /// m0..mp, mn.
  std::vector<Integer> sequence() const;
  std::vector<Weight> weights() const;
  WeightedGrevlexOrder order() const { return WeightedGrevlexOrder(weights()); }

  friend bool operator==(const CurveInstance&, const CurveInstance&) = default;
};

/// `m0,m1,...,mp;mn`.
std::string to_string(const CurveInstance& c);
CurveInstance parse_instance(std::string_view text);
void to_json(nlohmann::json& j, const CurveInstance& c);
void from_json(const nlohmann::json& j, CurveInstance& c);

enum class ValidationFailure {
  TooShort,
  NonPositive,
  TooLarge,
  NotIncreasing,
  NotArithmetic,
  GcdNotOne,
  NotMinimal,
};

std::string_view to_string(ValidationFailure f);

struct ValidationReport {
  std::optional<ValidationFailure> failure;
  std::string message;

  bool valid() const { return !failure.has_value(); }
};

/// Checks the hypotheses of the construction in order and reports the first
/// violated one. Rejects rather than repairs.
ValidationReport validate(const CurveInstance& c);

/// Throws UserError carrying the validation message.
void require_valid(const CurveInstance& c);

/// Largest generator value accepted by validate().
inline constexpr Integer kMaxGenerator = 1 << 20;

/// t = q * p + r with r in [1, p]. At t = 0 this gives q = -1, r = p.
struct TDecomposition {
  Integer q;
  Integer r;
};

TDecomposition t_decompose(Integer t, Integer p);

/// g_t = q_t * m_p + m_{r_t}.
Integer ladder_value(const CurveInstance& c, Integer t);

/// gamma in Gamma and gamma - m0 not in Gamma.
bool in_S(const CurveInstance& c, Integer gamma);

enum class CaseTag { Case1, Case2 };

std::string_view to_string(CaseTag tag);

struct DerivedParams {
  Integer u = 0;
  Integer v = 0;  // upsilon
  Integer w = 0;
  Integer z = 0;
  Integer lambda = 0;
  Integer mu = 0;
  Integer q = 0;
  Integer r = 0;
  Integer q_z = 0;
  Integer r_z = 0;
  Integer epsilon = 0;
  CaseTag case_tag = CaseTag::Case1;

  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

void to_json(nlohmann::json& j, const DerivedParams& d);
void from_json(const nlohmann::json& j, DerivedParams& d);

/// Computes u, upsilon and the unique (w, lambda), (z, mu) pairs, checks the
/// closing identity and assigns epsilon and the case. Expects a validated
/// instance; throws InternalError when a search cap is exceeded or when
/// uniqueness or the identity fails.
DerivedParams derive(const CurveInstance& c);

/// Independent re-check of the derived parameters by exhaustive range scans.
struct LemmaCheck {
  std::size_t w_solutions = 0;
  std::size_t z_solutions = 0;
  Integer identity_lhs = 0;
  Integer identity_rhs = 0;

  bool ok() const { return w_solutions == 1 && z_solutions == 1 && identity_lhs == identity_rhs; }
};

LemmaCheck verify_lemma(const CurveInstance& c, const DerivedParams& d);

}  // namespace semicurve
