#include <doctest.h>

#include "gca/grt.hpp"

#include <random>

using namespace gca;
using namespace gca::grt;

namespace {

long witt(int k, int n) {
  // dimensions of free Lie algebras, small cases only
  static const long table[4][6] = {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 2, 1, 2, 3, 6}, {0, 3, 3, 8, 18, 48}};
  return table[k][n];
}

LieElement random_xy(std::mt19937& rng, int cap, int deg) {
  LieElement e(xy_alphabet(), cap);
  for (const auto& w : lie::lyndon_words(2, deg)) e.add_term(w, static_cast<long>(rng() % 7) - 3);
  return e;
}

}  // namespace

TEST_CASE("t_n graded dimensions") {
  TnQuotient t3(3, 5), t4(4, 5);
  CHECK(t3.alphabet() == std::vector<std::string>{"t12", "t13", "t23"});
  CHECK(t4.alphabet().size() == 6);
  for (int d = 1; d <= 5; ++d) {
    // t_3 = lie(2) + center, t_4 = t_3 + lie(3)
    long d3 = witt(2, d) + (d == 1);
    CHECK(t3.dimension(d) == static_cast<std::size_t>(d3));
    CHECK(t4.dimension(d) == static_cast<std::size_t>(d3 + witt(3, d)));
    CHECK(t4.quotient_basis(d).size() == t4.dimension(d));
  }
  CHECK(t3.free_dimension(2) == 3);
  CHECK_THROWS(TnQuotient(5, 3));
  CHECK_THROWS(TnQuotient(4, 6));
}

TEST_CASE("t_3 center and relations") {
  TnQuotient t3(3, 5);
  for (const auto& r : t3.relations()) CHECK(t3.is_zero(r));
  LieElement c = t3.t(1, 2) + t3.t(1, 3) + t3.t(2, 3);
  CHECK(t3.t(2, 1) == t3.t(1, 2));
  std::vector<LieElement> elems{t3.t(1, 2), t3.t(1, 3), t3.t(2, 3)};
  // brackets of the central element with a spanning set of each degree
  for (int d = 1; d <= 4; ++d) {
    std::vector<LieElement> next;
    for (const auto& e : elems) {
      CHECK(t3.is_zero(lie::bracket(c, e)));
      if (d < 4)
        for (int l = 0; l < 3; ++l) next.push_back(lie::bracket(LieElement::generator(t3.alphabet(), 5, l), e));
    }
    if (d < 4) elems = std::move(next);
  }
  CHECK_FALSE(t3.is_zero(lie::bracket(t3.t(1, 2), t3.t(1, 3))));
  CHECK(t3.coordinates(t3.t(1, 2)).size() == 1);
}

TEST_CASE("sigma_3 satisfies the defining relations") {
  LieElement s = sigma3();
  CHECK(antisymmetry_residual(s).is_zero());
  CHECK(hexagon_residual(s).is_zero());
  CHECK(pentagon_check(s, 3));
  CHECK(pentagon_check(s, 4));
  CHECK(verify(s).ok());
  LieElement xs = x(3), ys = y(3);
  LieElement xy = lie::bracket(xs, ys);
  // the five terms collapse to [t12,t34] + [t13,t24]; the hexagon is what rules [x,y] out
  CHECK(pentagon_check(xy, 2));
  CHECK(hexagon_residual(xy) == Rational(3) * xy);
  CHECK_FALSE(verify(xy, 2).ok());
  CHECK(pentagon_check(LieElement(xy_alphabet(), 3), 3));
  CHECK_FALSE(verify(lie::bracket(xs, xy)).ok());
  CHECK_THROWS(pentagon_check(s, 5));
  CHECK_THROWS(pentagon_check(s, 2));
  CHECK_THROWS(pentagon_check(s + xy, 4));
  CHECK(substitute(s, {ys, xs}) == -s);
}

TEST_CASE("low-degree solution spaces") {
  CHECK(solution_space(1).empty());
  CHECK(solution_space(2).empty());
  auto s3 = solution_space(3);
  REQUIRE(s3.size() == 1);
  LieElement s = sigma3();
  CHECK((s3[0] == s || s3[0] == -s));
  CHECK(solution_space(4).empty());
  CHECK_THROWS(solution_space(5));
}

TEST_CASE("Ihara bracket") {
  LieElement s = sigma3(6);
  CHECK(ihara_bracket(s, s).is_zero());
  CHECK(derivation_delta(s, y(6)) == lie::bracket(y(6), s));
  CHECK(derivation_delta(s, x(6)).is_zero());
  CHECK_THROWS_AS(ihara_bracket(sigma3(3), sigma3(3)), std::overflow_error);
  std::mt19937 rng(12);
  for (int trial = 0; trial < 12; ++trial) {
    LieElement a = random_xy(rng, 9, 1 + trial % 3), b = random_xy(rng, 9, 1 + (trial / 3) % 3), c = random_xy(rng, 9, 2);
    CHECK(ihara_bracket(a, b) == -ihara_bracket(b, a));
    LieElement jac = ihara_bracket(a, ihara_bracket(b, c)) + ihara_bracket(b, ihara_bracket(c, a)) +
                     ihara_bracket(c, ihara_bracket(a, b));
    CHECK(jac.is_zero());
  }
  // inside the degree <= 3 solutions
  LieElement u = sigma3(9), v = Rational(-2) * sigma3(9), w = Rational(5) * sigma3(9);
  CHECK((ihara_bracket(u, ihara_bracket(v, w)) + ihara_bracket(v, ihara_bracket(w, u)) +
         ihara_bracket(w, ihara_bracket(u, v)))
            .is_zero());
}

TEST_CASE("Deligne-Drinfeld shape") {
  CHECK(dd_shape(sigma3(), 3));
  CHECK(dd_shape(lie::ad_power(x(3), y(3), 2), 3));
  CHECK_FALSE(dd_shape(lie::bracket(y(3), lie::bracket(y(3), x(3))), 3));
  CHECK_FALSE(dd_shape(sigma3(), 5));
  CHECK_FALSE(dd_shape(Rational(2) * sigma3(), 3));
  LieElement s5 = lie::ad_power(x(5), y(5), 4) + lie::bracket(y(5), lie::ad_power(x(5), y(5), 3));
  CHECK(dd_shape(s5, 5));
}
