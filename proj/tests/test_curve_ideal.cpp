#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "semicurve/curve_ideal.hpp"
#include "semicurve/errors.hpp"

using namespace semicurve;

namespace {

const CurveInstance kW{{5, 8, 11}, 7};

std::set<std::string> rendered(const std::vector<Binomial>& bs) {
  std::set<std::string> out;
  for (const auto& b : bs) out.insert(to_string(b));
  return out;
}

std::set<std::string> rendered(const std::vector<Monomial>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(to_string(m));
  return out;
}

}  // namespace

TEST(CurveIdeal, KernelCheck) {
  const std::vector<Weight> w{5, 8, 11, 7};
  EXPECT_TRUE(kernel_check({parse_monomial("x1*x2", 4), parse_monomial("x0*x3^2", 4)}, w));
  EXPECT_TRUE(kernel_check({parse_monomial("x3^3", 4), parse_monomial("x0^2*x2", 4)}, w));
  EXPECT_FALSE(kernel_check({parse_monomial("x1", 4), parse_monomial("x0", 4)}, w));
}

TEST(CurveIdeal, GeneratorsOfWorkedInstance) {
  const auto g = curve_generators(kW, derive(kW));
  EXPECT_EQ(rendered(g), (std::set<std::string>{"x1*x2 - x0*x3^2", "x2^2 - x1*x3^2", "x1*x3 - x0^3",
                                                 "x2*x3 - x0^2*x1", "x3^3 - x0^2*x2", "x1^2 - x0*x2"}));
  for (const auto& b : g) {
    EXPECT_TRUE(b.lead_is_first_term) << b.label;
    EXPECT_TRUE(kernel_check(b, kW.weights())) << b.label;
    EXPECT_TRUE(kW.order().compare(b.lead, b.tail) > 0) << b.label;
  }
}

TEST(CurveIdeal, ThetaOfSecondExample) {
  const CurveInstance c{{4, 7, 10}, 13};
  for (const auto& b : curve_generators(c, derive(c))) {
    if (b.family == Family::Theta) EXPECT_EQ(to_string(b), "x3^2 - x0^4*x2");
  }
}

TEST(CurveIdeal, FamilySizes) {
  for (const CurveInstance& c : {kW, CurveInstance{{4, 7, 10}, 13}, CurveInstance{{5, 7, 9}, 8},
                                 CurveInstance{{7, 8, 9}, 11}, CurveInstance{{3, 5}, 7},
                                 CurveInstance{{7, 9, 11, 13}, 10}}) {
    const auto d = derive(c);
    const auto p = static_cast<Integer>(c.p());
    std::map<Family, Integer> count;
    for (const auto& b : curve_generators(c, d)) ++count[b.family];
    EXPECT_EQ(count[Family::Phi], p - d.r + 1) << to_string(c);
    EXPECT_EQ(count[Family::Psi], (1 - d.epsilon) * p + d.r_z - d.r + 1) << to_string(c);
    EXPECT_EQ(count[Family::Theta], 1);
    EXPECT_EQ(count[Family::Alpha], p * (p - 1) / 2) << to_string(c);
  }
}

TEST(CurveIdeal, BinomialJson) {
  const auto g = curve_generators(kW, derive(kW));
  const nlohmann::json j = g.front();
  EXPECT_EQ(j.dump(), R"({"label":"phi_0","lead":[0,1,1,0],"tail":[1,0,0,2]})");
  const auto back = j.get<Binomial>();
  EXPECT_EQ(back.lead, g.front().lead);
  EXPECT_EQ(back.family, Family::Phi);
}

TEST(CurveIdeal, InitialClosedFormOfWorkedInstance) {
  const auto in = initial_closed_form(kW, derive(kW));
  EXPECT_EQ(to_string(in.ideal), "(x3^3, x2*x3, x2^2, x1*x3, x1*x2, x1^2)");
  EXPECT_TRUE(in.errata.empty());
}

TEST(CurveIdeal, InitialClosedFormAlwaysHasPurePowerOfXn) {
  for (const CurveInstance& c : {kW, CurveInstance{{3, 5}, 7}, CurveInstance{{7, 8, 9}, 11}}) {
    const auto d = derive(c);
    const auto xn = Monomial::variable(c.n() + 1, c.n(), static_cast<Exponent>(d.v));
    const auto in = initial_closed_form(c, d);
    const auto& gens = in.ideal.gens();
    EXPECT_NE(std::find(gens.begin(), gens.end(), xn), gens.end()) << to_string(c);
  }
}

TEST(CurveIdeal, ColonListsOfWorkedInstance) {
  const auto d = derive(kW);
  EXPECT_EQ(rendered(colon_closed_form(kW, d, {ClosedFormSelector::ColonX1ToPm1, CaseTag::Case1}).monomials),
            (std::set<std::string>{"x1"}));
  const auto socle = colon_closed_form(kW, d, {ClosedFormSelector::SocleRhoChi, CaseTag::Case1});
  EXPECT_EQ(rendered(socle.monomials), (std::set<std::string>{"x1"}));
  ASSERT_FALSE(socle.rows.empty());
  EXPECT_EQ(socle.rows.front().emitted, 0u);
  EXPECT_EQ(socle.rows.front().dropped_negative, 1u);
  EXPECT_THROW(colon_closed_form(kW, d, {ClosedFormSelector::ColonXn, CaseTag::Case2}), UserError);
}

TEST(CurveIdeal, CaseTwoColonXn) {
  const CurveInstance c{{7, 8, 9}, 11};
  const auto d = derive(c);
  ASSERT_EQ(d.case_tag, CaseTag::Case2);
  // x_{r-r_z} x_p^q x_n^{v-w-1} .. x_{r-1} x_p^q x_n^{v-w-1}, x_n^{v-1} with
  // q=1, r=2, r_z=1, v=2, w=1.
  EXPECT_EQ(rendered(colon_closed_form(c, d, {ClosedFormSelector::ColonXn, CaseTag::Case2}).monomials),
            (std::set<std::string>{"x1*x2", "x3"}));
}

TEST(CurveIdeal, DeltaRowFollowsQz) {
  // (5,7,9;8) has q_z = 1, so the delta row is inactive.
  const CurveInstance c{{5, 7, 9}, 8};
  const auto list = colon_closed_form(c, derive(c), {ClosedFormSelector::SocleRhoChi, CaseTag::Case1});
  bool seen = false;
  for (const auto& row : list.rows) {
    if (row.label.find("delta") != std::string::npos) {
      seen = true;
      EXPECT_FALSE(row.active);
      EXPECT_EQ(row.emitted, 0u);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(CurveIdeal, DivisorVariables) {
  EXPECT_EQ(colon_divisor_variables(kW, ClosedFormSelector::ColonX1ToPm1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(colon_divisor_variables(kW, ClosedFormSelector::ColonX1ToP), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(colon_divisor_variables(kW, ClosedFormSelector::ColonXn), (std::vector<std::size_t>{3}));
  EXPECT_EQ(colon_divisor_variables(kW, ClosedFormSelector::SocleRhoChi), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(colon_divisor_variables({{3, 5}, 7}, ClosedFormSelector::ColonX1ToPm1).empty());
}

TEST(CurveIdeal, GeneratorLeadsSelectorGivesLeads) {
  const auto list = colon_closed_form(kW, derive(kW), {ClosedFormSelector::GeneratorLeads, CaseTag::Case1});
  EXPECT_EQ(MonomialIdeal(4, list.monomials), initial_closed_form(kW, derive(kW)).ideal);
}
