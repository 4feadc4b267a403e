#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "heunforms/combinatorics.hpp"

using namespace heunforms;

namespace {

// Independent oracle: Pascal's triangle built by addition only.
std::vector<std::vector<BigInt>> pascal_triangle(long rows) {
  std::vector<std::vector<BigInt>> tri(rows + 1);
  for (long n = 0; n <= rows; ++n) {
    tri[n].resize(n + 1, BigInt(1));
    for (long k = 1; k < n; ++k) tri[n][k] = tri[n - 1][k - 1] + tri[n - 1][k];
  }
  return tri;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational::from_string("3/6") == Rational(1, 2));
  CHECK(Rational::from_string("-7").str() == "-7");
  CHECK(Rational::from_string("1/2").str() == "1/2");
  CHECK(Rational(4).str() == "4");
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-1, 2).pow(-3) == Rational(-8));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("binomial hand values and conventions") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial against the Pascal-triangle oracle") {
  const auto tri = pascal_triangle(100);
  // Frozen from the oracle.
  CHECK(tri[30][15] == BigInt(155117520));
  CHECK(binomial(30, 15) == BigInt(155117520));
  for (long n = 0; n <= 100; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == tri[n][k]);
      CHECK(binomial(n, k) == binomial(n, n - k));
    }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(3), 3) == Rational(60));
  CHECK(pochhammer(Rational(-2), 4) == Rational(0));
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("coefficient tables: hand values") {
  CHECK(coeff_a(1, 0) == Rational(1, 2));
  CHECK(coeff_a(2, 1) == Rational(1, 4));
  CHECK(coeff_a(2, 0) == Rational(3, 8));
  CHECK(coeff_r(1, 0) == Rational(1, 2));
  // Oracle: direct product of the defining factors.
  for (long n = 0; n <= 12; ++n)
    for (long j = 0; j <= n; ++j) {
      const Rational direct =
          Rational(BigInt(binomial(2 * j, j) * binomial(2 * n - 2 * j, n - j))) /
          Rational(4).pow(n);
      CHECK(coeff_a(n, j) == direct);
      CHECK(coeff_r(n, j) == direct / Rational(binomial(n, j)));
    }
  CHECK(coeff_r(2, 1) == Rational(1, 8));
  CHECK(coeff_r(2, 2) == Rational(3, 8));
  CHECK_THROWS_AS(coeff_a(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(coeff_r(3, -1), std::invalid_argument);
}

TEST_CASE("a-rows sum to 1 and both tables are symmetric, n <= 200") {
  for (long n = 0; n <= 200; ++n) {
    const auto a = CoeffTable::get(CoeffTable::Kind::A, n);
    const auto r = CoeffTable::get(CoeffTable::Kind::R, n);
    Rational sum(0);
    for (long j = 0; j <= n; ++j) {
      sum += a->at(j);
      CHECK(a->at(j) == a->at(n - j));
      CHECK(r->at(j) == r->at(n - j));
    }
    CHECK(sum == Rational(1));
  }
}

TEST_CASE("pochhammer-to-binomial conversion, 0 <= m, j <= 60") {
  for (long m = 0; m <= 60; ++m)
    for (long j = 0; j <= 60; ++j) {
      const Rational lhs =
          pochhammer(Rational(2 * m + 1, 2), j) / pochhammer(Rational(m + 1), j);
      const Rational rhs = Rational(binomial(2 * m + 2 * j, m + j)) /
                           (Rational(4).pow(j) * Rational(binomial(2 * m, m)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("coefficient rows are shared by the cache") {
  const auto first = CoeffTable::get(CoeffTable::Kind::A, 17);
  const auto second = CoeffTable::get(CoeffTable::Kind::A, 17);
  CHECK(first.get() == second.get());
  CHECK(first->n() == 17);
  CHECK(first->values().size() == 18);
}
