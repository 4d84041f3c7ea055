#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "semicurve/errors.hpp"
#include "semicurve/monomial.hpp"
#include "semicurve/monomial_ideal.hpp"
#include "semicurve/order.hpp"

using namespace semicurve;

namespace {

Monomial m(const char* text, std::size_t arity = 4) { return parse_monomial(text, arity); }

MonomialIdeal ideal(std::initializer_list<const char*> gens, std::size_t arity = 4) {
  std::vector<Monomial> g;
  for (auto t : gens) g.push_back(m(t, arity));
  return MonomialIdeal(arity, std::move(g));
}

MonomialIdeal inP_W() { return ideal({"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^3"}); }

const WeightedGrevlexOrder kW({5, 8, 11, 7});

}  // namespace

TEST(Monomial, TextRoundTrip) {
  EXPECT_EQ(to_string(m("x0^2*x3")), "x0^2*x3");
  EXPECT_EQ(to_string(Monomial(3)), "1");
  EXPECT_EQ(parse_monomial("1", 2), Monomial(2));
  EXPECT_EQ(parse_monomial(" x1^1 * x1 ", 3), Monomial({0, 2, 0}));
  EXPECT_EQ(parse_monomial("x2^3").arity(), 3u);
  for (const char* t : {"x1", "x0*x1^4*x3", "x3^12"}) EXPECT_EQ(to_string(m(t)), t);
}

TEST(Monomial, ParseErrors) {
  EXPECT_THROW(parse_monomial("y1"), UserError);
  EXPECT_THROW(parse_monomial("x1^"), UserError);
  EXPECT_THROW(parse_monomial("x5", 3), UserError);
  EXPECT_THROW(parse_monomial(""), UserError);
}

TEST(Monomial, Arithmetic) {
  const auto a = m("x0*x2^3"), b = m("x2*x3^2");
  EXPECT_EQ(a * b, m("x0*x2^4*x3^2"));
  EXPECT_EQ(lcm(a, b), m("x0*x2^3*x3^2"));
  EXPECT_EQ(gcd(a, b), m("x2"));
  EXPECT_EQ(colon_quotient(a, b), m("x0*x2^2"));
  EXPECT_EQ(exact_quotient(a * b, b), a);
  EXPECT_EQ(squarefree_part(a), m("x0*x2"));
  EXPECT_EQ(power(b, 3), m("x2^3*x3^6"));
  EXPECT_TRUE(b.divides(a * b));
  EXPECT_FALSE(a.divides(b));
  EXPECT_THROW(a * Monomial(3), UserError);
}

TEST(Monomial, ExponentOverflowIsAnError) {
  const Monomial big({0xFFFFFFF0u});
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(power(big, 2), std::overflow_error);
}

TEST(Order, WorkedInstanceLeads) {
  EXPECT_TRUE(kW.compare(m("x3^3"), m("x0^2*x2")) > 0);
  EXPECT_TRUE(kW.compare(m("x1*x2"), m("x0*x3^2")) > 0);
  EXPECT_TRUE(kW.compare(m("x1*x2"), m("x1*x2")) == 0);
  EXPECT_EQ(kW.weighted_degree(m("x1*x2")), 19u);
}

TEST(Order, Errors) {
  EXPECT_THROW(WeightedGrevlexOrder({}), UserError);
  EXPECT_THROW(WeightedGrevlexOrder({1, 0}), UserError);
  EXPECT_THROW(kW.compare(Monomial(3), Monomial(4)), UserError);
}

TEST(Order, AgreesWithTupleOracleAndAxioms) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t k = 1 + rng() % 5;
    std::vector<Weight> w(k);
    for (auto& x : w) x = 1 + rng() % 12;
    const WeightedGrevlexOrder ord(w);
    const auto a = oracle::random_monomial(rng, k, 4);
    const auto b = oracle::random_monomial(rng, k, 4);
    const auto c = oracle::random_monomial(rng, k, 4);
    const int expect = oracle::order_cmp(a, b, w);
    const auto got = ord.compare(a, b);
    ASSERT_EQ(got < 0 ? -1 : (got == 0 ? 0 : 1), expect);
    ASSERT_TRUE(ord.compare(a * c, b * c) == got);
    ASSERT_TRUE(ord.compare(b, a) == (0 <=> got));
    if (!a.is_unit()) ASSERT_TRUE(ord.compare(a, Monomial(k)) > 0);
    if (ord.compare(a, b) > 0 && ord.compare(b, c) > 0) ASSERT_TRUE(ord.compare(a, c) > 0);
  }
}

TEST(MonomialIdeal, Minimalize) {
  EXPECT_EQ(ideal({"x1", "x1*x2"}), ideal({"x1"}));
  EXPECT_EQ(ideal({"x1^2", "x1*x2", "x2^2"}).size(), 3u);
  auto with_dups = ideal({"x1^2", "x1*x2", "x1*x3", "x2^2", "x1*x3", "x2*x3", "x3^3", "x1*x3"});
  EXPECT_EQ(with_dups.size(), 6u);
  EXPECT_EQ(with_dups, inP_W());
  EXPECT_EQ(MonomialIdeal(4, inP_W().gens()), inP_W());
  EXPECT_THROW(MonomialIdeal(3, {m("x1")}), UserError);
}

TEST(MonomialIdeal, CanonicalOrderIsInsertionIndependent) {
  auto g = inP_W().gens();
  std::reverse(g.begin(), g.end());
  EXPECT_EQ(MonomialIdeal(4, g).gens(), inP_W().gens());
  EXPECT_EQ(to_string(inP_W()), "(x3^3, x2*x3, x2^2, x1*x3, x1*x2, x1^2)");
}

TEST(MonomialIdeal, Contains) {
  EXPECT_TRUE(ideal({"x1"}).contains(m("x1*x2")));
  EXPECT_FALSE(inP_W().contains(m("x3^2")));
  EXPECT_TRUE(MonomialIdeal::unit(4).contains(Monomial(4)));
  EXPECT_FALSE(MonomialIdeal::zero(4).contains(Monomial(4)));
}

TEST(MonomialIdeal, ProductsAndPowers) {
  const auto I = inP_W();
  EXPECT_EQ(power(I, 1), I);
  EXPECT_EQ(power(I, 0), MonomialIdeal::unit(4));
  EXPECT_EQ(product(ideal({"x1"}), ideal({"x2"})), ideal({"x1*x2"}));
  const auto I2 = power(I, 2);
  EXPECT_TRUE(I2.contains(m("x1^2*x3^2")));
  EXPECT_FALSE(I2.contains(m("x1*x3^3")));
  const auto pw = powers(I, 5);
  ASSERT_EQ(pw.size(), 5u);
  EXPECT_EQ(pw[1].size(), 15u);
  EXPECT_EQ(pw[2].size(), 28u);
  EXPECT_EQ(pw[3].size(), 45u);
  EXPECT_EQ(pw[4].size(), 66u);
  EXPECT_EQ(pw[2], power(I, 3));
}

TEST(MonomialIdeal, Colon) {
  const auto I = inP_W();
  EXPECT_EQ(colon(I, MonomialIdeal::unit(4)), I);
  EXPECT_EQ(colon(I, ideal({"x1"})), ideal({"x1", "x2", "x3"}));
  EXPECT_EQ(colon(I, ideal({"x1", "x2", "x3"})), ideal({"x1", "x2", "x3^2"}));
  EXPECT_EQ(colon(power(I, 2), I), I);
  EXPECT_THROW(colon(I, MonomialIdeal::zero(4)), UserError);
}

TEST(MonomialIdeal, IntersectAndRadical) {
  EXPECT_EQ(intersect(ideal({"x1"}), ideal({"x2"})), ideal({"x1*x2"}));
  EXPECT_EQ(intersect(inP_W(), inP_W()), inP_W());
  EXPECT_EQ(intersect(ideal({"x1", "x3"}), ideal({"x1", "x3^2"})), ideal({"x1", "x3^2"}));
  EXPECT_EQ(radical(ideal({"x1^2"})), ideal({"x1"}));
  EXPECT_EQ(radical(inP_W()), ideal({"x1", "x2", "x3"}));
  EXPECT_EQ(radical(MonomialIdeal::unit(4)), MonomialIdeal::unit(4));
}

TEST(MonomialIdeal, JsonRoundTrip) {
  const nlohmann::json j = inP_W();
  EXPECT_EQ(j.at("arity"), 4);
  EXPECT_EQ(j.get<MonomialIdeal>(), inP_W());
  EXPECT_EQ(nlohmann::json(j.get<MonomialIdeal>()).dump(), j.dump());
  EXPECT_THROW(nlohmann::json::parse(R"({"arity":2,"gens":[[1,2,3]]})").get<MonomialIdeal>(), UserError);
}

TEST(MonomialIdeal, MembershipAgreesWithEnumerationOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    const auto raw = oracle::random_gens(rng, k, 4, 3);
    const MonomialIdeal I(k, raw);
    for (const auto& x : oracle::monomials_up_to(k, 6)) {
      ASSERT_EQ(I.contains(x), oracle::contains(raw, x)) << to_string(I) << " " << to_string(x);
    }
  }
}

TEST(MonomialIdeal, ArithmeticIdentitiesOnRandomIdeals) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    const MonomialIdeal I(k, oracle::random_gens(rng, k, 4, 3));
    const MonomialIdeal J(k, oracle::random_gens(rng, k, 3, 3));
    const auto IJ = product(I, J);
    const auto cap = intersect(I, J);
    const auto q = colon(I, J);
    ASSERT_TRUE(cap.contains(IJ));
    ASSERT_TRUE(I.contains(cap) && J.contains(cap));
    ASSERT_TRUE(I.contains(product(q, J)));
    ASSERT_TRUE(q.contains(I));
    ASSERT_EQ(MonomialIdeal(k, I.gens()), I);
    ASSERT_EQ(intersect(I, J), intersect(J, I));
    ASSERT_EQ(radical(radical(I)), radical(I));
    for (const auto& g : I.gens()) ASSERT_TRUE(radical(I).contains(squarefree_part(g)));
    for (std::size_t a = 0; a < I.size(); ++a) {
      for (std::size_t b = 0; b < I.size(); ++b) ASSERT_TRUE(a == b || !I.gens()[a].divides(I.gens()[b]));
    }
  }
}
