#include "semicurve/curve_ideal.hpp"

#include <functional>
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "semicurve/errors.hpp"

namespace semicurve {

namespace {

// (variable index, exponent) pairs; exponents of a repeated variable add up
// before the sign is checked, so x_{r_z} x_p^{q_z} with r_z = p, q_z = -1
// is the unit.
using Factors = std::vector<std::pair<Integer, Integer>>;

std::optional<Monomial> build(std::size_t arity, const Factors& factors) {
  std::vector<Integer> e(arity, 0);
  for (const auto& [var, k] : factors) e[static_cast<std::size_t>(var)] += k;
  std::vector<Exponent> out(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    if (e[i] < 0) return std::nullopt;
    out[i] = static_cast<Exponent>(e[i]);
  }
  return Monomial(std::move(out));
}

struct RowSpec {
  std::string label;
  Integer lo = 0;
  Integer hi = 0;
  bool indexed = true;
  bool active = true;
  // All monomials contributed by running index i (several for the quadric
  // row, which also runs over j).
  std::function<std::vector<Factors>(Integer)> factors;
};

RowSpec single(std::string label, Factors f) {
  return RowSpec{std::move(label), 0, 0, false, true,
                 [f = std::move(f)](Integer) { return std::vector<Factors>{f}; }};
}

RowSpec indexed(std::string label, Integer lo, Integer hi,
                std::function<Factors(Integer)> f, bool active = true) {
  return RowSpec{std::move(label), lo, hi, true, active,
                 [f = std::move(f)](Integer i) { return std::vector<Factors>{f(i)}; }};
}

std::vector<RowSpec> rows_for(const CurveInstance& c, const DerivedParams& d,
                              ClosedFormSelector s) {
  const auto p = static_cast<Integer>(c.p());
  const auto n = static_cast<Integer>(c.n());
  const Integer q = d.q, r = d.r, qz = d.q_z, rz = d.r_z, eps = d.epsilon, v = d.v, w = d.w;
  const Integer psi_start = eps * p + r - rz;
  const bool case1 = d.case_tag == CaseTag::Case1;

  std::vector<RowSpec> rows;
  switch (s) {
    case ClosedFormSelector::GeneratorLeads:
      break;
    case ClosedFormSelector::InIdeal:
      rows.push_back(indexed("x_i x_p^q", r, p, [=](Integer i) { return Factors{{i, 1}, {p, q}}; }));
      rows.push_back(indexed("x_j x_p^(q-q_z-eps) x_n^(v-w)", psi_start, p, [=](Integer j) {
        return Factors{{j, 1}, {p, q - qz - eps}, {n, v - w}};
      }));
      rows.push_back(single("x_n^v", Factors{{n, v}}));
      rows.push_back(RowSpec{"x_i x_j", 1, p - 1, true, true, [=](Integer i) {
                               std::vector<Factors> out;
                               for (Integer j = i; j <= p - 1; ++j) out.push_back({{i, 1}, {j, 1}});
                               return out;
                             }});
      break;
    case ClosedFormSelector::ColonX1ToPm1:
      rows.push_back(indexed("x_i", 1, p - 1, [](Integer i) { return Factors{{i, 1}}; }));
      break;
    case ClosedFormSelector::ColonX1ToP:
      rows.push_back(indexed("x_i x_p^q", 1, r - 1, [=](Integer i) { return Factors{{i, 1}, {p, q}}; }));
      rows.push_back(
          indexed("x_i x_p^(q-1)", r, p - 1, [=](Integer i) { return Factors{{i, 1}, {p, q - 1}}; }));
      rows.push_back(indexed("x_i x_p^(q-q_z-eps) x_n^(v-w)", 1, psi_start - 1, [=](Integer i) {
        return Factors{{i, 1}, {p, q - qz - eps}, {n, v - w}};
      }));
      rows.push_back(indexed("x_i x_p^(q-q_z-eps-1) x_n^(v-w)", psi_start, p - 1, [=](Integer i) {
        return Factors{{i, 1}, {p, q - qz - eps - 1}, {n, v - w}};
      }));
      break;
    case ClosedFormSelector::ColonXn:
      if (case1) {
        rows.push_back(indexed("x_i x_p^(q-q_z-eps) x_n^(v-w-1)", p + r - rz, p - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q - qz - eps}, {n, v - w - 1}};
        }));
        rows.push_back(single("x_p^(q-q_z-eps+1) x_n^(v-w-1)",
                              Factors{{p, q - qz - eps + 1}, {n, v - w - 1}}));
      } else {
        rows.push_back(indexed("x_i x_p^q x_n^(v-w-1)", r - rz, r - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q}, {n, v - w - 1}};
        }));
      }
      rows.push_back(single("x_n^(v-1)", Factors{{n, v - 1}}));
      break;
    case ClosedFormSelector::SocleRhoChi:
      if (case1) {
        rows.push_back(indexed("rho: x_i x_p^(q-q_z-eps-1) x_n^(v-1)", psi_start, p - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q - qz - eps - 1}, {n, v - 1}};
        }));
        rows.push_back(indexed("chi: x_i x_p^q x_n^(v-w-1)", 1, r - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q}, {n, v - w - 1}};
        }));
        rows.push_back(indexed(
            "chi: delta(q_z,0) x_i x_p^(q-1) x_n^(v-w-1)", r, psi_start - 1,
            [=](Integer i) { return Factors{{i, 1}, {p, q - 1}, {n, v - w - 1}}; }, qz == 0));
        rows.push_back(indexed("chi: x_i x_p^(q-1) x_n^(v-w-1)", eps * p + r - eps * rz, p - 1,
                               [=](Integer i) { return Factors{{i, 1}, {p, q - 1}, {n, v - w - 1}}; }));
        rows.push_back(indexed("chi: x_i x_p^(q-q_z-eps) x_n^(v-1)", 1, psi_start - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q - qz - eps}, {n, v - 1}};
        }));
      } else {
        rows.push_back(indexed("rho: x_i x_p^(q-1) x_n^(v-1)", r - rz, p - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q - 1}, {n, v - 1}};
        }));
        rows.push_back(indexed("chi: x_i x_p^q x_n^(v-1)", 1, r - rz - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q}, {n, v - 1}};
        }));
        rows.push_back(indexed("chi: x_i x_p^q x_n^(v-w-1)", r - rz, r - 1, [=](Integer i) {
          return Factors{{i, 1}, {p, q}, {n, v - w - 1}};
        }));
      }
      break;
  }
  return rows;
}

ClosedFormList expand(std::size_t arity, const std::vector<RowSpec>& specs) {
  ClosedFormList out;
  for (const auto& spec : specs) {
    ClosedFormRow row{spec.label, spec.lo, spec.hi, spec.indexed, spec.active, 0, 0};
    if (spec.active) {
      const Integer lo = spec.indexed ? spec.lo : 0;
      const Integer hi = spec.indexed ? spec.hi : 0;
      for (Integer i = lo; i <= hi; ++i) {
        for (const auto& f : spec.factors(i)) {
          if (auto m = build(arity, f)) {
            out.monomials.push_back(std::move(*m));
            ++row.emitted;
          } else {
            ++row.dropped_negative;
          }
        }
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Phi: return "phi";
    case Family::Psi: return "psi";
    case Family::Theta: return "theta";
    case Family::Alpha: return "alpha";
  }
  return "unknown";
}

std::string to_string(const Binomial& b) { return to_string(b.lead) + " - " + to_string(b.tail); }

void to_json(nlohmann::json& j, const Binomial& b) {
  j = nlohmann::json{{"label", b.label}, {"lead", b.lead}, {"tail", b.tail}};
  if (!b.lead_is_first_term) j["swapped"] = true;
}

void from_json(const nlohmann::json& j, Binomial& b) {
  b.label = j.at("label").get<std::string>();
  b.lead = j.at("lead").get<Monomial>();
  b.tail = j.at("tail").get<Monomial>();
  b.lead_is_first_term = !j.value("swapped", false);
  const auto stem = b.label.substr(0, b.label.find('_'));
  if (stem == "phi") b.family = Family::Phi;
  else if (stem == "psi") b.family = Family::Psi;
  else if (stem == "theta") b.family = Family::Theta;
  else if (stem == "alpha") b.family = Family::Alpha;
  else throw UserError("unknown binomial label '" + b.label + "'");
}

bool kernel_check(const Binomial& b, std::span<const Weight> weights) {
  const WeightedGrevlexOrder order({weights.begin(), weights.end()});
  return order.weighted_degree(b.lead) == order.weighted_degree(b.tail);
}

std::vector<Binomial> curve_generators(const CurveInstance& c, const DerivedParams& d) {
  const auto p = static_cast<Integer>(c.p());
  const auto n = static_cast<Integer>(c.n());
  const std::size_t arity = c.n() + 1;
  const auto order = c.order();
  const Integer q = d.q, r = d.r, qz = d.q_z, rz = d.r_z, eps = d.epsilon;

  std::vector<Binomial> out;
  auto emit = [&](Family family, std::string label, const Factors& first, const Factors& second) {
    auto a = build(arity, first);
    auto b = build(arity, second);
    internal_check(a && b, "negative exponent in " + label + " for " + to_string(c));
    const auto cmp = order.compare(*a, *b);
    internal_check(cmp != 0, "degenerate binomial " + label + " for " + to_string(c));
    Binomial bin{std::move(*a), std::move(*b), family, std::move(label), true};
    if (cmp < 0) {
      std::swap(bin.lead, bin.tail);
      bin.lead_is_first_term = false;
    }
    out.push_back(std::move(bin));
  };

  for (Integer i = 0; i <= p - r; ++i) {
    emit(Family::Phi, "phi_" + std::to_string(i), {{i + r, 1}, {p, q}},
         {{0, d.lambda - 1}, {i, 1}, {n, d.w}});
  }
  for (Integer j = 0; j <= (1 - eps) * p + rz - r; ++j) {
    emit(Family::Psi, "psi_" + std::to_string(j),
         {{eps * p + r - rz + j, 1}, {p, q - qz - eps}, {n, d.v - d.w}},
         {{0, d.lambda + d.mu - eps}, {j, 1}});
  }
  emit(Family::Theta, "theta", {{n, d.v}}, {{0, d.mu}, {rz, 1}, {p, qz}});
  for (Integer i = 1; i <= p - 1; ++i) {
    for (Integer j = i; j <= p - 1; ++j) {
      emit(Family::Alpha, "alpha_" + std::to_string(i) + "_" + std::to_string(j),
           {{i, 1}, {j, 1}}, {{i - 1, 1}, {j + 1, 1}});
    }
  }
  return out;
}

ClosedFormIdeal initial_closed_form(const CurveInstance& c, const DerivedParams& d) {
  const std::size_t arity = c.n() + 1;
  auto list = expand(arity, rows_for(c, d, ClosedFormSelector::InIdeal));
  ClosedFormIdeal out{MonomialIdeal(arity, std::move(list.monomials)), {}};
  for (const auto& row : list.rows) {
    if (row.dropped_negative > 0) {
      out.errata.push_back("inP row '" + row.label + "' dropped " +
                           std::to_string(row.dropped_negative) +
                           " monomial(s) with a negative exponent for " + to_string(c));
    }
  }
  return out;
}

std::string_view to_string(ClosedFormSelector s) {
  switch (s) {
    case ClosedFormSelector::GeneratorLeads: return "GENERATOR_LEADS";
    case ClosedFormSelector::InIdeal: return "IN_IDEAL";
    case ClosedFormSelector::ColonX1ToPm1: return "COLON_X1_TO_PM1";
    case ClosedFormSelector::ColonX1ToP: return "COLON_X1_TO_P";
    case ClosedFormSelector::ColonXn: return "COLON_XN";
    case ClosedFormSelector::SocleRhoChi: return "SOCLE_RHO_CHI";
  }
  return "unknown";
}

ClosedFormList colon_closed_form(const CurveInstance& c, const DerivedParams& d,
                                 ClosedFormSpec spec) {
  if (spec.case_tag != d.case_tag) {
    throw UserError(std::string("closed form requested for ") + std::string(to_string(spec.case_tag)) +
                    " but instance " + to_string(c) + " is " + std::string(to_string(d.case_tag)));
  }
  if (spec.selector == ClosedFormSelector::GeneratorLeads) {
    ClosedFormList out;
    for (const auto& b : curve_generators(c, d)) out.monomials.push_back(b.lead);
    return out;
  }
  return expand(c.n() + 1, rows_for(c, d, spec.selector));
}

std::vector<std::size_t> colon_divisor_variables(const CurveInstance& c, ClosedFormSelector s) {
  const std::size_t p = c.p();
  std::vector<std::size_t> vars;
  switch (s) {
    case ClosedFormSelector::ColonX1ToPm1:
      for (std::size_t i = 1; i < p; ++i) vars.push_back(i);
      break;
    case ClosedFormSelector::ColonX1ToP:
      for (std::size_t i = 1; i <= p; ++i) vars.push_back(i);
      break;
    case ClosedFormSelector::ColonXn:
      vars.push_back(c.n());
      break;
    case ClosedFormSelector::SocleRhoChi:
      for (std::size_t i = 1; i <= c.n(); ++i) vars.push_back(i);
      break;
    default:
      break;
  }
  return vars;
}

}  // namespace semicurve
