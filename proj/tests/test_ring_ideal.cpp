#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "gorcol/ideal.hpp"
#include "test_util.hpp"

using namespace gorcol;
using namespace gtest_util;

namespace {

RingPtr ring2(const Field& f = Field::rationals()) { return PolyRing::make(2, f); }
RingPtr ring3(const Field& f = Field::rationals()) { return PolyRing::make(3, f); }

// independent nested-loop count of degree-i monomials in d variables
std::size_t count_monomials(std::size_t d, int deg) {
  if (d == 1) return 1;
  std::size_t total = 0;
  for (int e = 0; e <= deg; ++e) total += count_monomials(d - 1, deg - e);
  return total;
}

Polynomial sum_of_vars(const RingPtr& r) {
  Polynomial l(r);
  for (std::size_t j = 0; j < r->nvars(); ++j)
    l = l + Polynomial::monomial(r, r->var(j));
  return l;
}

}  // namespace

TEST_CASE("degree bases are enumerated in graded lex order") {
  auto r = ring3();
  const auto& b = r->basis(2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == mono({2, 0, 0}));
  CHECK(b[1] == mono({1, 1, 0}));
  CHECK(b[2] == mono({1, 0, 1}));
  CHECK(b[3] == mono({0, 2, 0}));
  CHECK(b[4] == mono({0, 1, 1}));
  CHECK(b[5] == mono({0, 0, 2}));
  for (std::size_t d = 1; d <= 4; ++d) {
    auto rr = PolyRing::make(d, Field::rationals());
    for (int i = 0; i <= 6; ++i) CHECK(rr->dim(i) == count_monomials(d, i));
  }
}

TEST_CASE("weighted bases respect the weights") {
  auto r = PolyRing::make(2, Field::rationals(), {2, 1});
  CHECK(r->dim(0) == 1);
  CHECK(r->dim(1) == 1);  // y
  CHECK(r->dim(2) == 2);  // x, y^2
  CHECK(r->wdeg(mono({1, 1})) == 3);
  CHECK(r->max_weight() == 2);
}

TEST_CASE("ideal slices match the monomial oracle") {
  auto r = ring2();
  std::vector<Monomial> gens = {mono({2, 0}), mono({0, 2})};
  IdealHandle I = monomial_ideal(r, gens, 8);
  CHECK(I.slice_rank(2) == 2);
  CHECK(I.slice_rank(1) == 0);
  CHECK(I.slice_rank(3) == 4);  // x^3, x^2 y, x y^2, y^3
  for (int i = 0; i <= 8; ++i) CHECK(I.slice_rank(i) == monomial_slice_count(r, gens, i));
  CHECK_THROWS_AS(I.slice(9), DegreeBoundError);
}

TEST_CASE("quotient views: Hilbert functions and lengths") {
  auto r2 = ring2();
  QuotientView q = quotient_view(power_of_maximal(r2, 3, 6));
  CHECK_FALSE(q.truncated());
  CHECK(q.hilbert() == std::vector<std::size_t>{1, 2, 3});
  CHECK(q.length() == 6);
  CHECK(q.max_degree() == 2);

  auto r3 = ring3();
  QuotientView q3 = quotient_view(pure_power_ideal(r3, {3, 3, 3}, 8));
  CHECK(q3.length() == 27);
  CHECK(q3.max_degree() == 6);

  QuotientView qm = quotient_view(maximal_ideal(r2, 4));
  CHECK(qm.hilbert() == std::vector<std::size_t>{1});
  CHECK(qm.length() == 1);

  // h(i) + rank(I_i) = dim T_i
  for (int i = 0; i <= 6; ++i) {
    IdealHandle I = power_of_maximal(r2, 3, 6);
    CHECK(q.h(i) + I.slice_rank(i) == r2->dim(i));
  }
}

TEST_CASE("non-Artinian quotients carry an explicit truncation marker") {
  auto r = ring2();
  IdealHandle I = monomial_ideal(r, {mono({2, 0})}, 6);
  QuotientView q = quotient_view(I);
  CHECK(q.truncated());
  CHECK_THROWS_AS(q.length(), TruncationError);
  CHECK_THROWS_AS(q.max_degree(), TruncationError);
}

TEST_CASE("length of T/m^n matches direct enumeration for d <= 4, n <= 5") {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto r = PolyRing::make(d, Field::rationals());
    for (int n = 1; n <= 5; ++n) {
      std::size_t expect = 0;
      for (int i = 0; i < n; ++i) expect += count_monomials(d, i);
      QuotientView q = quotient_view(power_of_maximal(r, n, n + 1));
      CHECK(q.length() == expect);
    }
  }
}

TEST_CASE("membership") {
  auto r = ring2();
  IdealHandle I = monomial_ideal(r, {mono({2, 0}), mono({0, 2})}, 6);
  CHECK(membership(poly_of_monomial(r, {2, 1}), I));
  CHECK_FALSE(membership(poly_of_monomial(r, {1, 1}), I));
  CHECK(membership(Polynomial(r), I));  // 0 is in every ideal
  Polynomial inhom = poly_of_monomial(r, {1, 0}) + poly_of_monomial(r, {0, 2});
  CHECK_THROWS_AS(membership(inhom, I), InhomogeneousError);
}

TEST_CASE("sum, product and power") {
  auto r = ring2();
  IdealHandle X = monomial_ideal(r, {mono({1, 0})}, 6);
  IdealHandle Y = monomial_ideal(r, {mono({0, 1})}, 6);
  CHECK(ideal_equal(ideal_sum(X, Y), maximal_ideal(r, 6)));
  CHECK(ideal_equal(ideal_product(maximal_ideal(r, 6), maximal_ideal(r, 6)),
                    power_of_maximal(r, 2, 6)));

  IdealHandle I = monomial_ideal(r, {mono({2, 0}), mono({0, 2})}, 10);
  IdealHandle I2 = ideal_power(I, 2);
  IdealHandle expect = monomial_ideal(r, {mono({4, 0}), mono({2, 2}), mono({0, 4})}, 10);
  for (int i = 0; i <= 9; ++i) CHECK(I2.slice_rank(i) == expect.slice_rank(i));
}

TEST_CASE("colon: worked examples") {
  auto r = ring2();
  IdealHandle I = monomial_ideal(r, {mono({2, 0}), mono({0, 2})}, 8);
  IdealHandle byX = monomial_ideal(r, {mono({1, 0})}, 8);
  IdealHandle C = colon(I, byX, 6);
  IdealHandle expect = monomial_ideal(r, {mono({1, 0}), mono({0, 2})}, 6);
  CHECK(ideal_equal(C, expect));

  // colon by the maximal ideal of m^n is m^(n-1)
  for (int n = 2; n <= 4; ++n) {
    IdealHandle mn = power_of_maximal(r, n, 8);
    CHECK(ideal_equal(colon(mn, maximal_ideal(r, 8), 6), power_of_maximal(r, n - 1, 6)));
  }

  CHECK_THROWS_AS(colon(I, unit_ideal(r, 6), 6), UnitIdealError);
  CHECK_THROWS_AS(colon(I, zero_ideal(r, 6), 6), ZeroIdealError);
}

TEST_CASE("colon of the cubic complete intersection by the linear form") {
  auto r = ring3();
  IdealHandle ci = pure_power_ideal(r, {3, 3, 3}, 10);
  IdealHandle C = colon(ci, principal_ideal(sum_of_vars(r), 10), 8);
  for (const auto& g : ci.generators()) CHECK(membership(g, C));
  QuotientView qc = quotient_view(C);
  QuotientView qci = quotient_view(ci);
  CHECK(qc.h(3) == 6);
  CHECK(qci.h(4) == 6);
}

TEST_CASE("canonical minimal generators of the quadric witness colon") {
  auto r = ring3();
  IdealHandle ci = pure_power_ideal(r, {2, 2, 2}, 8);
  IdealHandle C = colon(ci, principal_ideal(sum_of_vars(r), 8), 6);
  const auto& gens = C.generators();
  REQUIRE(gens.size() == 5);
  auto P = [&](std::vector<int> e) { return poly_of_monomial(r, std::move(e)); };
  // fully reduced canonical form of the degree-2 kernel
  CHECK(gens[0] == P({2, 0, 0}));
  CHECK(gens[1] == P({1, 1, 0}) - P({0, 1, 1}));
  CHECK(gens[2] == P({1, 0, 1}) - P({0, 1, 1}));
  CHECK(gens[3] == P({0, 2, 0}));
  CHECK(gens[4] == P({0, 0, 2}));
  CHECK(min_generators(C) == 5);
  // same ideal as the unreduced echelon generating set
  IdealHandle alt = IdealHandle::make(
      r,
      {P({2, 0, 0}), P({0, 2, 0}), P({0, 0, 2}), P({1, 1, 0}) - P({1, 0, 1}),
       P({1, 0, 1}) - P({0, 1, 1})},
      6);
  CHECK(ideal_equal(C, alt));
}

TEST_CASE("socle examples") {
  auto r = ring2();
  CHECK(socle(power_of_maximal(r, 3, 6)).dim == 3);
  SocleInfo ci = socle(monomial_ideal(r, {mono({2, 0}), mono({0, 2})}, 6));
  CHECK(ci.dim == 1);
  REQUIRE(ci.basis.size() == 1);
  CHECK(ci.basis[0] == poly_of_monomial(r, {1, 1}));
  CHECK(socle(maximal_ideal(r, 4)).dim == 1);
}

TEST_CASE("order and minimal generator counts") {
  auto r = ring2();
  CHECK(order_of(monomial_ideal(r, {mono({3, 0}), mono({1, 1}), mono({0, 3})}, 6)) == 2);
  CHECK(min_generators(power_of_maximal(r, 2, 6)) == 3);
  IdealHandle I =
      monomial_ideal(r, {mono({2, 0}), mono({1, 1}), mono({0, 2}), mono({3, 0})}, 6);
  CHECK(min_generators(I) == 3);  // x^3 is redundant
  CHECK_THROWS_AS(order_of(zero_ideal(r, 4)), ZeroIdealError);
}

TEST_CASE("ideal equality") {
  auto r = ring2();
  CHECK(ideal_equal(ideal_product(power_of_maximal(r, 2, 8), maximal_ideal(r, 8)),
                    power_of_maximal(r, 3, 8)));
  CHECK_FALSE(ideal_equal(monomial_ideal(r, {mono({2, 0}), mono({0, 2})}, 8),
                          power_of_maximal(r, 2, 8)));
  auto r3 = ring3();
  IdealHandle C = pure_power_ideal(r3, {2, 2, 2}, 8);
  CHECK(ideal_equal(colon(C, power_of_maximal(r3, 2, 8), 6), power_of_maximal(r3, 2, 6)));
}

TEST_CASE("colon monotonicity and associativity on random monomial ideals") {
  std::mt19937_64 rng(31337);
  for (std::size_t d = 2; d <= 3; ++d) {
    auto r = PolyRing::make(d, Field::rationals());
    for (int trial = 0; trial < 12; ++trial) {
      // cofinite monomial ideal: pure powers plus noise
      std::vector<Monomial> gens;
      for (std::size_t j = 0; j < d; ++j)
        gens.push_back(r->var(j, static_cast<int>(draw(rng, 2, 4))));
      for (int k = 0; k < 2; ++k) {
        std::vector<int> e(d);
        for (auto& x : e) x = static_cast<int>(draw(rng, 0, 3));
        if (Monomial(e).total_degree() == 0) continue;
        gens.push_back(mono(std::move(e)));
      }
      int bound = 16;
      IdealHandle I = monomial_ideal(r, gens, bound);
      auto rand_small = [&]() {
        std::vector<Monomial> g;
        int cnt = static_cast<int>(draw(rng, 1, 2));
        for (int k = 0; k < cnt; ++k) {
          std::vector<int> e(d, 0);
          e[static_cast<std::size_t>(draw(rng, 0, static_cast<long long>(d) - 1))] =
              static_cast<int>(draw(rng, 1, 2));
          g.push_back(mono(std::move(e)));
        }
        return monomial_ideal(r, g, bound);
      };
      IdealHandle J = rand_small(), K = rand_small();
      IdealHandle IJ = colon(I, J, 12);
      for (const auto& g : I.generators()) CHECK(membership(g, IJ));  // I in (I : J)
      IdealHandle lhs = colon(IJ, K, 10);
      IdealHandle rhs = colon(I, ideal_product(J, K), 10);
      CHECK(ideal_equal(lhs, rhs));
    }
  }
}

TEST_CASE("socle dimension is at least one for nonzero Artinian quotients") {
  std::mt19937_64 rng(99);
  auto r = ring2();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Monomial> gens = {r->var(0, static_cast<int>(draw(rng, 1, 4))),
                                  r->var(1, static_cast<int>(draw(rng, 1, 4)))};
    IdealHandle I = monomial_ideal(r, gens, 12);
    if (is_unit_ideal(I)) continue;
    CHECK(socle(I).dim >= 1);
  }
}

TEST_CASE("slice cache is consistent under concurrent readers") {
  auto r = ring3();
  IdealHandle I = pure_power_ideal(r, {3, 3, 3}, 10);
  std::vector<std::thread> workers;
  std::vector<std::size_t> ranks(8, 0);
  for (std::size_t t = 0; t < ranks.size(); ++t) {
    workers.emplace_back(
        [&I, &ranks, t] { ranks[t] = I.slice_rank(static_cast<int>(9 - t % 3)); });
  }
  for (auto& w : workers) w.join();
  IdealHandle fresh = pure_power_ideal(r, {3, 3, 3}, 10);
  for (int i = 0; i <= 10; ++i) CHECK(I.slice(i) == fresh.slice(i));
  for (std::size_t t = 0; t < ranks.size(); ++t)
    CHECK(ranks[t] == fresh.slice(static_cast<int>(9 - t % 3)).rank());
}

TEST_CASE("weighted quotients certify Artinian with weight-aware runs") {
  auto r = PolyRing::make(2, Field::rationals(), {2, 1});
  IdealHandle I = IdealHandle::make(
      r, {poly_of_monomial(r, {1, 0}), poly_of_monomial(r, {0, 2})}, 8);
  QuotientView q = quotient_view(I);
  CHECK_FALSE(q.truncated());
  CHECK(q.length() == 2);  // 1 and y
  CHECK(q.max_degree() == 1);

  IdealHandle J = IdealHandle::make(r, {poly_of_monomial(r, {1, 0})}, 8);
  CHECK(quotient_view(J).truncated());
}

TEST_CASE("weighted engine over a prime field") {
  auto r = PolyRing::make(2, Field::prime(5), {2, 1});
  IdealHandle I = IdealHandle::make(
      r, {poly_of_monomial(r, {1, 0}), poly_of_monomial(r, {0, 2})}, 8);
  SocleInfo soc = socle(I);
  CHECK(soc.dim == 1);  // T/(x, y^2) with basis 1, y
  CHECK(quotient_view(I).length() == 2);
  IdealHandle C = colon(I, maximal_ideal(r, 8), 6);
  CHECK(ideal_equal(C, IdealHandle::make(r, {poly_of_monomial(r, {1, 0}),
                                             poly_of_monomial(r, {0, 1})}, 6)));
}
