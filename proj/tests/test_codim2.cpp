#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gorcol/codim2.hpp"
#include "gorcol/errors.hpp"
#include "test_util.hpp"

using namespace gorcol;
using gtest_util::draw;

namespace {

MonomialIdeal2 ideal2(std::vector<std::pair<int, int>> gens) {
  return MonomialIdeal2::make(std::move(gens));
}

MonomialIdeal2 m_power(int n) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i <= n; ++i) gens.emplace_back(n - i, i);
  return MonomialIdeal2::make(std::move(gens));
}

std::vector<int> sorted_orders(const MonomialIdeal2& I) {
  auto t = base_point_tree(I).orders;
  std::sort(t.begin(), t.end());
  return t;
}

MonomialIdeal2 random_mprimary(std::mt19937_64& rng, int max_exp) {
  std::vector<std::pair<int, int>> gens;
  int a = static_cast<int>(draw(rng, 1, max_exp));
  int b = static_cast<int>(draw(rng, 1, max_exp));
  gens.emplace_back(a, 0);
  gens.emplace_back(0, b);
  int extra = static_cast<int>(draw(rng, 0, 4));
  for (int k = 0; k < extra; ++k) {
    if (a > 1 && b > 1)
      gens.emplace_back(static_cast<int>(draw(rng, 1, a - 1)),
                        static_cast<int>(draw(rng, 1, b - 1)));
  }
  return MonomialIdeal2::make(std::move(gens));
}

}  // namespace

TEST_CASE("construction keeps a minimal antichain and rejects non-primary input") {
  MonomialIdeal2 I = ideal2({{3, 0}, {0, 2}, {3, 1}, {4, 0}});
  CHECK(I.generators() == std::vector<std::pair<int, int>>{{0, 2}, {3, 0}});
  CHECK_THROWS_AS(ideal2({{1, 1}, {2, 0}}), NotMPrimaryError);  // no pure y power
  CHECK_THROWS_AS(ideal2({{0, 0}}), NotMPrimaryError);
}

TEST_CASE("newton polygon worked examples") {
  NewtonPolygon a = newton_polygon(ideal2({{3, 0}, {0, 2}}));
  CHECK(a.vertices == std::vector<std::pair<int, int>>{{3, 0}, {0, 2}});
  CHECK(a.complement_area == 3);

  NewtonPolygon b = newton_polygon(m_power(2));
  CHECK(b.vertices == std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(b.complement_area == 2);

  NewtonPolygon c = newton_polygon(m_power(1));
  CHECK(c.complement_area == mpq_class(1, 2));
}

TEST_CASE("integral closure worked examples") {
  CHECK(integral_closure(ideal2({{2, 0}, {0, 2}})) == m_power(2));
  CHECK(integral_closure(ideal2({{3, 0}, {0, 2}})) ==
        ideal2({{3, 0}, {2, 1}, {0, 2}}));
  for (int n = 1; n <= 5; ++n) CHECK(integral_closure(m_power(n)) == m_power(n));
}

TEST_CASE("invariants worked examples") {
  Codim2Invariants a = invariants(ideal2({{3, 0}, {0, 2}}));
  CHECK(a.ord == 2);
  CHECK(a.mu == 2);
  CHECK(a.colength == 6);
  CHECK(a.closure_colength == 5);
  CHECK_FALSE(a.integrally_closed);

  Codim2Invariants b = invariants(m_power(2));
  CHECK(b.ord == 2);
  CHECK(b.mu == 3);
  CHECK(b.colength == 3);
  CHECK(b.integrally_closed);

  Codim2Invariants c = invariants(m_power(1));
  CHECK(c.ord == 1);
  CHECK(c.mu == 2);
  CHECK(c.colength == 1);
}

TEST_CASE("base point trees") {
  CHECK(sorted_orders(ideal2({{3, 0}, {0, 2}})) == std::vector<int>{1, 1, 2});
  CHECK(sorted_orders(ideal2({{2, 0}, {0, 2}})) == std::vector<int>{2});
  CHECK(sorted_orders(m_power(1)) == std::vector<int>{1});
  // chart paths are recorded from the root
  BasePointTree t = base_point_tree(ideal2({{3, 0}, {0, 2}}));
  REQUIRE(t.charts.size() == 3);
  CHECK(t.charts[0] == "");
}

TEST_CASE("hoskin-deligne length and multiplicity") {
  CHECK(hd_length(ideal2({{3, 0}, {0, 2}})) == 5);
  CHECK(multiplicity(ideal2({{3, 0}, {0, 2}})) == 6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(hd_length(m_power(n)) == static_cast<long long>(n) * (n + 1) / 2);
    CHECK(multiplicity(m_power(n)) == static_cast<long long>(n) * n);
  }
}

TEST_CASE("minimal reductions on the worked examples") {
  ReductionResult a = minimal_reduction(m_power(2), 7);
  CHECK(a.r == 1);
  CHECK(a.ci_colength == 4);

  ReductionResult b = minimal_reduction(ideal2({{3, 0}, {0, 2}}), 7);
  CHECK(b.r == 0);  // two generators already form the reduction
  CHECK(b.ci_colength == 6);

  ReductionResult c = minimal_reduction(m_power(1), 7);
  CHECK(c.r == 0);
  CHECK(c.ci_colength == 1);
}

TEST_CASE("colength report on the worked examples") {
  Codim2Report a = colength_report(m_power(2), 11);
  CHECK(a.e0 == 4);
  CHECK(a.lambda == 3);
  CHECK(a.socle_dim == 2);
  CHECK(a.ineq_mult_ord);
  CHECK(a.ineq_mult_socle);
  CHECK(a.colength_within_socle_bound);
  CHECK(a.ci_colength - a.lambda == 1);  // lambda(S) - lambda(R)
  CHECK(a.tree_single_node);

  Codim2Report b = colength_report(ideal2({{3, 0}, {0, 2}}), 11);
  CHECK(b.e0 == 6);
  CHECK(b.mu == 2);
  CHECK(b.lambda == 6);
  CHECK(b.ci_colength == b.lambda);  // already a complete intersection
  CHECK_FALSE(b.tree_single_node);

  Codim2Report c = colength_report(m_power(1), 11);
  CHECK(c.e0 == 1);
  CHECK(c.lambda == 1);
  CHECK(c.ci_colength - c.lambda == c.lambda - c.socle_dim);  // 0 = 0, tight
}

TEST_CASE("closure is idempotent and multiplicative on random pairs") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal2 I = random_mprimary(rng, 8);
    MonomialIdeal2 J = random_mprimary(rng, 8);
    MonomialIdeal2 cI = integral_closure(I);
    CHECK(integral_closure(cI) == cI);
    CHECK(integral_closure(I.product(J)) ==
          integral_closure(I).product(integral_closure(J)));
  }
}

TEST_CASE("closure interacts with order and generator counts as expected") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal2 I = random_mprimary(rng, 8);
    MonomialIdeal2 c = integral_closure(I);
    CHECK(c.order() == I.order());
    CHECK(I.num_generators() <= c.num_generators());
    CHECK(static_cast<int>(c.num_generators()) - 1 == c.order());
    CHECK(c.colength() <= I.colength());
  }
}

TEST_CASE("oracle agreement on a random mini corpus") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal2 I = random_mprimary(rng, 8);
    // hd_length and multiplicity throw InternalCheckError if either oracle
    // pair disagrees; reaching the checks below means both matched
    long long hd = hd_length(I);
    long long e0 = multiplicity(I);
    CHECK(hd == integral_closure(I).colength());
    CHECK(newton_polygon(I).complement_area * 2 == static_cast<long>(e0));
    Codim2Report rep = colength_report(I, 1000 + trial);
    CHECK(rep.ineq_mult_ord);
    CHECK(rep.ineq_mult_socle);
    CHECK(rep.colength_within_socle_bound);
    CHECK(rep.ci_colength == e0);
  }
}
