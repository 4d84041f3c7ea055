#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "semicurve/errors.hpp"
#include "semicurve/semigroup.hpp"

using namespace semicurve;

namespace {

const CurveInstance kW{{5, 8, 11}, 7};

DerivedParams expected(Integer u, Integer v, Integer w, Integer lambda, Integer z, Integer mu, Integer q, Integer r,
                       Integer qz, Integer rz, Integer eps, CaseTag tag) {
  return DerivedParams{u, v, w, z, lambda, mu, q, r, qz, rz, eps, tag};
}

// Valid instances with p <= 3 and small generators, in enumeration order.
std::vector<CurveInstance> small_corpus(Integer max_mp, Integer max_mn) {
  std::vector<CurveInstance> out;
  for (Integer p = 1; p <= 3; ++p) {
    for (Integer m0 = 1; m0 + p <= max_mp; ++m0) {
      for (Integer d = 1; m0 + p * d <= max_mp; ++d) {
        std::vector<Integer> a;
        for (Integer i = 0; i <= p; ++i) a.push_back(m0 + i * d);
        for (Integer mn = 1; mn <= max_mn; ++mn) {
          CurveInstance c{a, mn};
          if (validate(c).valid()) out.push_back(c);
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST(Semigroup, Membership) {
  const std::vector<Integer> g{5, 8, 11};
  EXPECT_TRUE(member(g, 21));
  EXPECT_FALSE(member(g, 14));
  EXPECT_TRUE(member(g, 0));
  EXPECT_FALSE(member(g, -3));
  EXPECT_THROW(SemigroupMembership({}), UserError);
  EXPECT_THROW(SemigroupMembership({3, 0}), UserError);
}

TEST(Semigroup, MembershipAgreesWithOracle) {
  SemigroupMembership table({6, 10, 15});
  for (Integer x = -2; x < 200; ++x) ASSERT_EQ(table.contains(x), oracle::member({6, 10, 15}, x)) << x;
  // Gamma' may have gcd > 1: no Frobenius cutoff applies.
  SemigroupMembership even({4, 6});
  for (Integer x = 0; x < 300; ++x) ASSERT_EQ(even.contains(x), oracle::member({4, 6}, x)) << x;
}

TEST(Semigroup, TDecomposition) {
  const auto t0 = t_decompose(0, 2);
  EXPECT_EQ(t0.q, -1);
  EXPECT_EQ(t0.r, 2);
  EXPECT_EQ(ladder_value(kW, 0), 0);
  EXPECT_EQ(t_decompose(3, 2).q, 1);
  EXPECT_EQ(t_decompose(3, 2).r, 1);
  EXPECT_EQ(ladder_value(kW, 3), 19);
  EXPECT_EQ(t_decompose(2, 2).q, 0);
  EXPECT_EQ(t_decompose(2, 2).r, 2);
  EXPECT_EQ(ladder_value(kW, 2), 11);
  for (Integer p = 1; p <= 5; ++p) {
    for (Integer t = 0; t < 40; ++t) {
      const auto d = t_decompose(t, p);
      ASSERT_EQ(d.q * p + d.r, t);
      ASSERT_GE(d.r, 1);
      ASSERT_LE(d.r, p);
    }
  }
}

TEST(Semigroup, SetS) {
  EXPECT_TRUE(in_S(kW, 0));
  EXPECT_TRUE(in_S(kW, 11));
  EXPECT_FALSE(in_S(kW, 12));
}

TEST(Semigroup, Validation) {
  EXPECT_TRUE(validate(kW).valid());
  const auto a = validate({{4, 6, 8}, 5});
  ASSERT_FALSE(a.valid());
  EXPECT_EQ(*a.failure, ValidationFailure::NotMinimal);
  const auto b = validate({{4, 6, 8}, 3});
  ASSERT_FALSE(b.valid());
  EXPECT_EQ(*b.failure, ValidationFailure::NotMinimal);
  EXPECT_EQ(*validate({{5}, 7}).failure, ValidationFailure::TooShort);
  EXPECT_EQ(*validate({{0, 3}, 7}).failure, ValidationFailure::NonPositive);
  EXPECT_EQ(*validate({{5, 4}, 7}).failure, ValidationFailure::NotIncreasing);
  EXPECT_EQ(*validate({{5, 8, 12}, 7}).failure, ValidationFailure::NotArithmetic);
  EXPECT_EQ(*validate({{4, 6, 8}, 10}).failure, ValidationFailure::GcdNotOne);
  EXPECT_EQ(*validate({{5, 8}, kMaxGenerator + 1}).failure, ValidationFailure::TooLarge);
  EXPECT_THROW(require_valid({{4, 6, 8}, 5}), UserError);
}

TEST(Semigroup, InstanceFormats) {
  EXPECT_EQ(parse_instance("5,8,11;7"), kW);
  EXPECT_EQ(parse_instance(" 5, 8 ,11 ; 7 "), kW);
  EXPECT_EQ(to_string(kW), "5,8,11;7");
  const nlohmann::json j = kW;
  EXPECT_EQ(j.dump(), R"({"arith":[5,8,11],"extra":7})");
  EXPECT_EQ(j.get<CurveInstance>(), kW);
  EXPECT_THROW(parse_instance("5,8,11"), UserError);
  EXPECT_THROW(parse_instance("5,a;7"), UserError);
  EXPECT_THROW(parse_instance("5,8;7;9"), UserError);
}

TEST(Semigroup, DeriveWorkedInstances) {
  EXPECT_EQ(derive(kW), expected(3, 3, 2, 1, 2, 2, 1, 1, 0, 2, 1, CaseTag::Case1));
  EXPECT_EQ(derive({{4, 7, 10}, 13}), expected(3, 2, 1, 1, 2, 4, 1, 1, 0, 2, 1, CaseTag::Case1));
  EXPECT_EQ(derive({{5, 7, 9}, 8}), expected(4, 2, 1, 2, 3, 0, 1, 2, 1, 1, 0, CaseTag::Case1));
  const auto c2 = derive({{7, 8, 9}, 11});
  EXPECT_EQ(c2.case_tag, CaseTag::Case2);
  EXPECT_EQ(c2.epsilon, 0);
  EXPECT_EQ(c2.q_z, 0);
}

TEST(Semigroup, DerivedParamsJson) {
  const nlohmann::json j = derive(kW);
  EXPECT_EQ(j.at("upsilon"), 3);
  EXPECT_EQ(j.at("case"), "CASE1");
  EXPECT_EQ(j.get<DerivedParams>(), derive(kW));
}

TEST(Semigroup, DeriveAgreesWithBruteForceLemmaScan) {
  for (const auto& c : small_corpus(14, 14)) {
    const auto d = derive(c);
    const auto o = oracle::lemma(c);
    ASSERT_EQ(o.w_solutions, 1u) << to_string(c);
    ASSERT_EQ(o.z_solutions, 1u) << to_string(c);
    ASSERT_TRUE(o.identity) << to_string(c);
    ASSERT_EQ(d.u, o.u) << to_string(c);
    ASSERT_EQ(d.v, o.v) << to_string(c);
    ASSERT_EQ(d.w, o.w) << to_string(c);
    ASSERT_EQ(d.lambda, o.lambda) << to_string(c);
    ASSERT_EQ(d.z, o.z) << to_string(c);
    ASSERT_EQ(d.mu, o.mu) << to_string(c);
    ASSERT_TRUE(verify_lemma(c, d).ok());
    ASSERT_LE(d.v, c.arith[0]);
    ASSERT_EQ(d.epsilon == 0, d.r > d.r_z);
    ASSERT_EQ(d.case_tag == CaseTag::Case2, d.epsilon == 0 && d.q_z == 0);
    ASSERT_EQ(derive(c), d);
  }
}
