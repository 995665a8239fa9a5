#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gorcol/linkage.hpp"
#include "test_util.hpp"

using namespace gorcol;
using namespace gtest_util;

namespace {
const Field QQ = Field::rationals();
}

TEST_CASE("direct links of quadric powers") {
  auto r = PolyRing::make(3, QQ);
  IdealHandle C = pure_power_ideal(r, {2, 2, 2}, 8);
  IdealHandle B = power_of_maximal(r, 2, 8);
  LinkStep step = make_link(C, B);
  CHECK(step.certified_gorenstein);
  CHECK(step.double_link_contains_source);
  CHECK(step.double_link_equals_source);
  CHECK(ideal_equal(step.target, power_of_maximal(r, 2, 8)));  // self-linked
}

TEST_CASE("the cubic witness links m^3 to m^2") {
  WitnessResult w = witness_ideal(3, 3, 2, QQ);
  const RingPtr& r = w.ideal.ring();
  int bound = w.ideal.degree_bound();
  LinkStep step = make_link(w.ideal, power_of_maximal(r, 3, bound));
  CHECK(ideal_equal(step.target, power_of_maximal(r, 2, bound)));
}

TEST_CASE("linking a complete intersection to itself terminates at the unit ideal") {
  auto r = PolyRing::make(2, QQ);
  IdealHandle C = pure_power_ideal(r, {3, 3}, 8);
  LinkStep step = make_link(C, C);
  CHECK(is_unit_ideal(step.target));
  CHECK(step.double_link_contains_source);
}

TEST_CASE("make_link rejects bad inputs") {
  auto r = PolyRing::make(2, QQ);
  // not contained
  CHECK_THROWS_AS(make_link(pure_power_ideal(r, {2, 2}, 8), power_of_maximal(r, 3, 8)),
                  HypothesisError);
  // not Gorenstein
  CHECK_THROWS_AS(make_link(power_of_maximal(r, 2, 8), maximal_ideal(r, 8)), HypothesisError);
}

TEST_CASE("colon identity inside graded complete intersections") {
  // d=3, quadrics, f = l (s=1), n=2: both sides are m + c
  auto r3 = PolyRing::make(3, QQ);
  CHECK(verify_p2({2, 2, 2}, linear_form_sum(r3), 2));

  // d=2, cubics, f = l^2 (s=2), n=1
  auto r2 = PolyRing::make(2, QQ);
  CHECK(verify_p2({3, 3}, linear_form_sum(r2).pow(2), 1));

  // degenerate unit case: f constant, n = t + 1
  Polynomial one = Polynomial::constant(r2, Scalar::one(QQ));
  CHECK(verify_p2({3, 3}, one, 5));

  // out of range
  CHECK_THROWS_AS(verify_p2({2, 2, 2}, linear_form_sum(r3).pow(2), 3), HypothesisError);
}

TEST_CASE("power link exponents across the admissible range") {
  // d=3, n=2: (C_2 : m^2) = m^(2-s)
  for (int s = 0; s <= 2; ++s) {
    PowerLinkResult res = power_link_exponent(3, 2, s, QQ);
    CHECK(res.verified);
    CHECK(res.rhs_exponent == std::max(0, 2 - s));
  }
  // d=2, n=3, s=0: ((X^3,Y^3) : m^3) = m^2
  PowerLinkResult two = power_link_exponent(2, 3, 0, QQ);
  CHECK(two.verified);
  CHECK(two.rhs_exponent == 2);

  // refuses below the hypothesis threshold
  CHECK_THROWS_AS(power_link_exponent(4, 3, 1, QQ), HypothesisError);
  // refuses prime fields
  CHECK_THROWS_AS(power_link_exponent(3, 2, 1, Field::prime(5)), HypothesisError);
}

TEST_CASE("self-link at the critical exponent") {
  for (auto [d, n] : std::vector<std::pair<std::size_t, int>>{{3, 2}, {3, 3}, {4, 2}}) {
    int s = (static_cast<int>(d) - 2) * (n - 1) - 1;
    PowerLinkResult res = power_link_exponent(d, n, s, QQ);
    CHECK(res.verified);
    CHECK(res.rhs_exponent == n);
  }
}

TEST_CASE("descending chains reach the maximal ideal in n-1 steps") {
  auto chain = chain_to_ci(3, 3, QQ);
  REQUIRE(chain.size() == 2);
  auto r = chain[0].source.ring();
  CHECK(ideal_equal(chain[0].source, power_of_maximal(r, 3, 8)));
  CHECK(ideal_equal(chain[1].target, maximal_ideal(r, 8)));

  auto chain2 = chain_to_ci(2, 4, QQ);
  REQUIRE(chain2.size() == 3);
  auto r2 = chain2[0].source.ring();
  CHECK(ideal_equal(chain2.back().target, maximal_ideal(r2, 8)));
  for (const auto& step : chain2) CHECK(step.certified_gorenstein);

  CHECK(chain_to_ci(3, 1, QQ).empty());
}

TEST_CASE("sop context validation") {
  CHECK_THROWS_AS(make_sop_context({2, 0}, QQ), HypothesisError);
  SopContext ctx = make_sop_context({1, 2}, QQ);
  CHECK(ctx.rank_e == 2);
}

TEST_CASE("sop verification: squares in two variables") {
  SopContext ctx = make_sop_context({2, 2}, QQ);
  SopReport rep = sop_verify(ctx, 2, 0);
  CHECK(rep.e == 4);
  CHECK(rep.lambda_power == std::vector<std::size_t>{4, 12});
  CHECK(rep.lambda_prime == std::vector<std::size_t>{1, 3});
  CHECK(rep.length_scaling);
  CHECK(rep.witness_base_change);
  CHECK(rep.witness_gorenstein);
  CHECK(rep.witness_inside_power);
  CHECK(rep.trace_is_previous_power);
  CHECK(rep.g_certified);
  CHECK(rep.g_lower == 4);  // lambda(T/(X^2,Y^2))
}

TEST_CASE("sop verification: mixed weights") {
  SopContext ctx = make_sop_context({1, 2}, QQ);
  SopReport rep = sop_verify(ctx, 2, 0);
  CHECK(rep.e == 2);
  CHECK(rep.length_scaling);
  CHECK(rep.lambda_power == std::vector<std::size_t>{2, 6});
  CHECK(rep.witness_base_change);
  CHECK(rep.trace_is_previous_power);
  CHECK(rep.g_certified);

  SopContext ctx3 = make_sop_context({1, 1, 2}, QQ);
  SopReport rep3 = sop_verify(ctx3, 2, 1);
  CHECK(rep3.e == 2);
  CHECK(rep3.lambda_power[1] == 8);  // 2 * lambda(T'/m'^2) = 2 * 4
  CHECK(rep3.length_scaling);
  CHECK(rep3.witness_base_change);
  CHECK(rep3.witness_gorenstein);
  CHECK(rep3.trace_is_previous_power);
  CHECK(rep3.g_certified);
}

TEST_CASE("sop verification degenerates to the maximal ideal case") {
  SopContext ctx = make_sop_context({1, 1}, QQ);
  SopReport rep = sop_verify(ctx, 3, 0);
  CHECK(rep.e == 1);
  CHECK(rep.length_scaling);
  CHECK(rep.witness_base_change);
  CHECK(rep.trace_is_previous_power);
  CHECK(rep.g_certified);
  // matches the plain witness certification for T/m^3
  QuotientView R = quotient_view(power_of_maximal(ctx.ring, 3, 8));
  WitnessResult w = witness_ideal(ctx.ring, 3, 0);
  ColengthBounds b = colength_bounds(R, w.ideal);
  CHECK(b.certified);
  CHECK(rep.g_lower == b.lower);
}
