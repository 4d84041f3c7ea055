#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semicurve/monomial.hpp"
#include "semicurve/monomial_ideal.hpp"
#include "semicurve/order.hpp"
#include "semicurve/semigroup.hpp"

namespace semicurve {

enum class Family { Phi, Psi, Theta, Alpha };

std::string_view to_string(Family f);

/// lead - tail with unit coefficients.
struct Binomial {
  Monomial lead;
  Monomial tail;
  Family family = Family::Phi;
  /// e.g. "phi_0", "alpha_1_2", "theta".
  std::string label;
  /// False when the order made the second displayed term the leading one.
  bool lead_is_first_term = true;
};

/// `lead - tail` in the monomial text format.
std::string to_string(const Binomial& b);
/// `{"label", "lead", "tail"}`, plus `"swapped": true` when the order
/// reversed the displayed terms.
void to_json(nlohmann::json& j, const Binomial& b);
void from_json(const nlohmann::json& j, Binomial& b);

/// True iff lead and tail have equal weighted degree, i.e. the binomial lies
/// in the kernel of x_i -> t^{m_i}.
bool kernel_check(const Binomial& b, std::span<const Weight> weights);

/// The four families phi_i, psi_j, theta, alpha_{i,j} generating the defining
/// ideal P, with leads assigned by the instance's weighted grevlex order.
std::vector<Binomial> curve_generators(const CurveInstance& c, const DerivedParams& d);

struct ClosedFormIdeal {
  MonomialIdeal ideal;
  /// Non-empty only if a displayed monomial had a negative exponent and was
  /// dropped.
  std::vector<std::string> errata;
};

/// The displayed generators of inP: x_i x_p^q, x_j x_p^{q-q_z-eps} x_n^{v-w},
/// x_n^v and the quadrics x_i x_j, minimalized.
ClosedFormIdeal initial_closed_form(const CurveInstance& c, const DerivedParams& d);

enum class ClosedFormSelector {
  GeneratorLeads,
  InIdeal,
  ColonX1ToPm1,
  ColonX1ToP,
  ColonXn,
  SocleRhoChi,
};

std::string_view to_string(ClosedFormSelector s);

struct ClosedFormSpec {
  ClosedFormSelector selector = ClosedFormSelector::InIdeal;
  CaseTag case_tag = CaseTag::Case1;
};

/// One displayed row of a closed-form list, after index substitution.
struct ClosedFormRow {
  std::string label;
  Integer lo = 0;
  Integer hi = 0;
  /// Rows without a running index emit exactly one monomial.
  bool indexed = true;
  /// False for a Kronecker-delta row whose condition fails.
  bool active = true;
  std::size_t emitted = 0;
  /// Monomials treated as 0 because an exponent came out negative.
  std::size_t dropped_negative = 0;

  bool empty_range() const { return indexed && lo > hi; }
};

struct ClosedFormList {
  std::vector<Monomial> monomials;
  std::vector<ClosedFormRow> rows;
};

/// The literal monomial list of the selected formula, as residue-class
/// representatives. Monomials with a negative exponent are treated as 0 and
/// dropped; delta_{q_z,0} rows are emitted only when q_z = 0. Throws
/// UserError when spec.case_tag disagrees with d.case_tag.
ClosedFormList colon_closed_form(const CurveInstance& c, const DerivedParams& d,
                                 ClosedFormSpec spec);

/// Variables generating the ideal the selected colon formula divides by
/// (x1..x_{p-1}, x1..x_p, x_n, or x1..x_n). Empty for the non-colon
/// selectors and for x1..x_{p-1} when p = 1.
std::vector<std::size_t> colon_divisor_variables(const CurveInstance& c, ClosedFormSelector s);

}  // namespace semicurve
