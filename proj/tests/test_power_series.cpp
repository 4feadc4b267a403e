#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heunforms/power_series.hpp"

using namespace heunforms;

namespace {

PowerSeries make(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.push_back(Rational(c));
  return PowerSeries(std::move(v));
}

PowerSeries random_series(std::mt19937& rng, long order) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  std::vector<Rational> v;
  for (long k = 0; k <= order; ++k) v.push_back(Rational(num(rng), den(rng)));
  return PowerSeries(std::move(v));
}

}  // namespace

TEST_CASE("arithmetic hand values") {
  CHECK(make({1, 2}) + make({3, 4}) == make({4, 6}));
  CHECK(make({1, 1}) * make({1, 1}) == make({1, 2}));  // truncated at the min order
  CHECK(Rational(1, 2) * make({1, -2, 2}) ==
        PowerSeries({Rational(1, 2), Rational(-1), Rational(1)}));
}

TEST_CASE("truncation order propagation") {
  const PowerSeries a = make({1, 2, 3, 4});
  const PowerSeries b = make({1, 1});
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK((Rational(3) * a).order() == 3);
  CHECK(a.truncated(2) == make({1, 2, 3}));
  CHECK_THROWS_AS(a.truncated(9), std::invalid_argument);
}

TEST_CASE("differentiation") {
  CHECK(make({1, -2, 2}).derivative() == make({-2, 4}));
  CHECK(make({7, 0}).derivative() == make({0}));
  CHECK(make({0, 0, 1}).derivative() == make({0, 2}));
  CHECK(make({3, 1}).derivative().order() == 0);
  CHECK_THROWS_AS(make({5}).derivative(), std::invalid_argument);
}

TEST_CASE("product rule on random exact series") {
  std::mt19937 rng(20240517u);
  for (int rep = 0; rep < 40; ++rep) {
    const long order = 2 + static_cast<long>(rng() % 19);  // <= 20
    const PowerSeries a = random_series(rng, order);
    const PowerSeries b = random_series(rng, order);
    const PowerSeries lhs = (a * b).derivative();
    const PowerSeries rhs = a.derivative() * b + a * b.derivative();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polynomial multiplication keeps the series order") {
  const PowerSeries a = make({1, 1, 1, 1});
  const Polynomial p({Rational(0), Rational(1)});  // x
  const PowerSeries shifted = mul_poly(a, p);
  CHECK(shifted == make({0, 1, 1, 1}));
  CHECK(shifted.order() == 3);
}

TEST_CASE("binomial series of (1-2x)^e") {
  CHECK(binomial_power_series(Rational(-1), 3) == make({1, 2, 4, 8}));
  CHECK(binomial_power_series(Rational(2), 4) == make({1, -4, 4, 0, 0}));
  // (1-2x)^{1/2} squared is 1-2x; (1-2x)^{-1} (1-2x) is 1.
  const long order = 16;
  const PowerSeries root = binomial_power_series(Rational(1, 2), order);
  CHECK(root * root == binomial_power_series(Rational(1), order));
  const PowerSeries inv = binomial_power_series(Rational(-1), order);
  CHECK(inv * binomial_power_series(Rational(1), order) ==
        binomial_power_series(Rational(0), order));
}

TEST_CASE("eval is the Horner partial sum") {
  const PowerSeries s = make({1, -2, 2});
  CHECK(s.eval(Rational(1, 2)) == Rational(1, 2));
  CHECK(s.eval(Rational(0)) == Rational(1));
  CHECK(s.eval(Rational(1, 3)) == Rational(5, 9));
}

TEST_CASE("polynomial basics") {
  const Polynomial p({Rational(-1), Rational(0), Rational(3)});  // 3x^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(2)) == Rational(11));
  CHECK(p.derivative() == Polynomial({Rational(0), Rational(6)}));
  CHECK((p * Polynomial::constant(Rational(0))).is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
  const Polynomial q = Polynomial::monomial(Rational(1), 3) - Polynomial::monomial(Rational(1), 3);
  CHECK(q.is_zero());
}
