#include <doctest.h>

#include "gca/chern.hpp"

#include <random>

using namespace gca;
using namespace gca::chern;
using gca::ratlin::make_rational;

TEST_CASE("canonical degree and Calabi-Yau") {
  CompleteIntersection quintic{3, 1, {5}};
  CHECK(canonical_degree(quintic) == 0);
  CHECK(is_calabi_yau(quintic));
  CHECK(canonical_degree({4, 1, {1}}) == -5);
  CHECK(canonical_degree({1, 1, {3}}) == 0);
  CHECK(is_calabi_yau({1, 1, {3}}));
  CHECK_FALSE(is_calabi_yau({2, 1, {2}}));
  CHECK(is_calabi_yau({3, 2, {3, 3}}));
  CHECK(is_calabi_yau({2, 2, {2, 3}}));  // K3
  CHECK_THROWS(canonical_degree({3, 1, {}}));
  CHECK_THROWS(canonical_degree({3, 1, {0}}));
  CHECK_THROWS(canonical_degree({3, 0, {}}));
  // CY iff the first Chern character vanishes
  for (int d = 0; d <= 4; ++d)
    for (long a = 1; a <= 6; ++a)
      for (long b = 1; b <= 6; ++b) {
        CompleteIntersection ci{d, 2, {a, b}};
        CHECK(is_calabi_yau(ci) == (chern_character_coeff(ci, 1) == 0));
      }
}

TEST_CASE("Chern character coefficients") {
  CompleteIntersection quintic{3, 1, {5}};
  CHECK(chern_character_coeff(quintic, 3) == -20);
  CHECK(chern_character_coeff(quintic, 1) == 0);
  CHECK(chern_character_coeff(quintic, 2) == make_rational(5 - 25, 2));
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 5; ++n) {
      long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      CHECK(chern_character_coeff({d, 1, {1}}, n) == make_rational(d + 1, fact));
    }
  // strictly decreasing in the largest degree for n >= 2
  for (int n = 2; n <= 6; ++n)
    for (long a = 1; a < 8; ++a) CHECK(chern_character_coeff({3, 2, {2, a + 1}}, n) < chern_character_coeff({3, 2, {2, a}}, n));
  CHECK_THROWS(chern_character_coeff(quintic, 0));
}

TEST_CASE("nontriviality grid") {
  CompleteIntersection quintic{3, 1, {5}};
  CHECK(chern_action_nontrivial(quintic, 3, 0));
  CHECK_FALSE(chern_action_nontrivial(quintic, 3, 1));
  CHECK_FALSE(chern_action_nontrivial(quintic, 5, 0));
  CHECK_THROWS(chern_action_nontrivial({2, 1, {2}}, 3, 0));
  CHECK_THROWS(chern_action_nontrivial(quintic, 4, 0));
  CHECK_THROWS(chern_action_nontrivial(quintic, 1, 0));
  CHECK_THROWS(chern_action_nontrivial(quintic, 3, -1));
  ChernTable t = chern_table(quintic, 5);
  CHECK(t.calabi_yau);
  REQUIRE(t.ch.size() == 5);
  CHECK(t.ch[2] == -20);
  CHECK(t.grid.size() == 8);
  CHECK(t.grid[0].n == 3);
  CHECK(t.grid[0].q == 0);
  CHECK(t.grid[0].nontrivial);
  CHECK_FALSE(t.grid[1].nontrivial);
  CHECK(chern_table({2, 1, {2}}, 3).grid.empty());
}

TEST_CASE("q series relation") {
  for (int m : {0, 1, 10, 20}) CHECK(verify_q_relation(m));
  CHECK_THROWS(verify_q_relation(21));
  // independent route: q(t)^2 = q~(t) q~(-t)
  int m = 20;
  Series q = symalg::q_series(m), qt = symalg::q_tilde_series(m);
  CHECK(q * q == qt * qt.reflect());
  // q~^2 = t/(1-e^{-t}) = 1 + t/2 + t^2/12 - t^4/720 + ...
  Series sq = qt * qt;
  CHECK(sq[1] == make_rational(1, 2));
  CHECK(sq[2] == make_rational(1, 12));
  CHECK(sq[3] == 0);
  CHECK(sq[4] == make_rational(-1, 720));
  CHECK(sq[6] == make_rational(1, 30240));
  Series bad = qt;
  bad[4] += make_rational(1, 1000);
  CHECK_FALSE(verify_q_relation(q, bad));
}

TEST_CASE("admissible genera") {
  int m = 12;
  Series q = symalg::q_series(m), qt = symalg::q_tilde_series(m);
  CHECK(admissible_genus(q));
  CHECK(admissible_genus(qt));
  Series f = Series::constant(m, 1) + Series::variable(m);
  CHECK_FALSE(admissible_genus(f));
  CHECK_THROWS(admissible_genus(Series::variable(m)));
  CHECK_THROWS(admissible_genus(Series::constant(1, 1)));
  // multiplying by exp(odd) keeps the even part of log
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Series odd(m);
    for (int k = 1; k <= m; k += 2) odd[k] = make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    Series g = q * symalg::series_exp(odd);
    CHECK(admissible_genus(g));
    Series even(m);
    even[2 + 2 * (trial % 5)] = 1;
    CHECK_FALSE(admissible_genus(g * symalg::series_exp(even)));
  }
}
