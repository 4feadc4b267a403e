#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heunforms/catalog.hpp"
#include "heunforms/combinatorics.hpp"
#include "heunforms/entropy.hpp"
#include "heunforms/hypergeom.hpp"

using namespace heunforms;

namespace {

Rational tol10(long e) { return Rational(10).pow(-e); }

}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(DistributionFamily({Distribution::Binomial, 0, Rational(1, 2)}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DistributionFamily({Distribution::Binomial, 2, Rational(3, 2)}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      DistributionFamily({Distribution::NegativeBinomial, 2, Rational(0)}).validate(),
      std::invalid_argument);
  CHECK_THROWS_AS(DistributionFamily({Distribution::Poisson, 2, Rational(-1)}).validate(),
                  std::invalid_argument);
  CHECK(parse_distribution("poisson") == Distribution::Poisson);
  CHECK_FALSE(parse_distribution("gaussian").has_value());
}

TEST_CASE("power sums at hand-checked points") {
  const PowerSum binom = power_sum_2({Distribution::Binomial, 1, Rational(1, 2)}, tol10(12));
  REQUIRE(binom.exact.has_value());
  CHECK(*binom.exact == Rational(1, 2));
  CHECK(binom.truncation_bound == Rational(0));

  for (long n : {1L, 4L, 9L}) {
    const PowerSum degenerate = power_sum_2({Distribution::Binomial, n, Rational(0)}, tol10(12));
    CHECK(*degenerate.exact == Rational(1));
  }

  const PowerSum poisson0 = power_sum_2({Distribution::Poisson, 1, Rational(0)}, tol10(12));
  CHECK(poisson0.value.to_double() == 1.0);
  CHECK(poisson0.truncation_bound == Rational(0));
}

TEST_CASE("power sums lie in (0,1] and hit 1 only when degenerate") {
  for (long n = 1; n <= 6; ++n)
    for (long i = 1; i <= 6; ++i) {
      const Rational x(i, 7);
      const PowerSum b = power_sum_2({Distribution::Binomial, n, x}, tol10(12));
      CHECK(*b.exact > Rational(0));
      CHECK(*b.exact < Rational(1));
      const PowerSum nb = power_sum_2({Distribution::NegativeBinomial, n, x}, tol10(12));
      CHECK(nb.value > HighFloat(0.0));
      CHECK(nb.value < HighFloat(1.0));
      const PowerSum po = power_sum_2({Distribution::Poisson, n, x}, tol10(12));
      CHECK(po.value > HighFloat(0.0));
      CHECK(po.value < HighFloat(1.0));
    }
  const PowerSum one = power_sum_2({Distribution::Binomial, 5, Rational(1)}, tol10(12));
  CHECK(*one.exact == Rational(1));
}

TEST_CASE("binomial power sum is symmetric in x and 1-x") {
  for (long n = 1; n <= 8; ++n)
    for (long i = 1; i <= 10; ++i) {
      const Rational x(i, 11);
      CHECK(*power_sum_2({Distribution::Binomial, n, x}, tol10(9)).exact ==
            *power_sum_2({Distribution::Binomial, n, Rational(1) - x}, tol10(9)).exact);
    }
}

TEST_CASE("renyi2") {
  CHECK(renyi2(Rational(1)).to_double() == 0.0);
  CHECK(std::abs(renyi2(Rational(1, 2)).to_double() - std::log(2.0)) < 1e-15);
  CHECK(std::abs(renyi2(Rational(1, 4)).to_double() - std::log(4.0)) < 1e-15);
  // -ln is additive over the square: renyi2(1/4) = 2 renyi2(1/2), exactly in
  // the working precision.
  CHECK(abs(renyi2(Rational(1, 4)) - (renyi2(Rational(1, 2)) + renyi2(Rational(1, 2))))
            .to_double() < 1e-70);
  CHECK_THROWS_AS(renyi2(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(renyi2(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("cross-check: binomial sums equal the even closed form exactly") {
  const CrossCheckReport report = cross_check(
      Distribution::Binomial, 2, {Rational(1, 3), Rational(1, 7), Rational(6, 7)}, tol10(12));
  CHECK(report.all_pass());
  for (const auto& p : report.points) CHECK(p.exact_match);
}

TEST_CASE("cross-check: negative binomial against the Laurent form at -x") {
  // Brute-force oracle for the n = 1, x = 1 sum: 1/3.
  Rational brute(0);
  for (long k = 0; k < 200; ++k) {
    const Rational t = Rational(binomial(k, k)) * Rational(1).pow(k) * Rational(2).pow(-1 - k);
    brute += t * t;
  }
  CHECK((brute - Rational(1, 3)).abs() < tol10(30));
  const CrossCheckReport report =
      cross_check(Distribution::NegativeBinomial, 1, {Rational(1)}, tol10(12));
  CHECK(report.all_pass());

  const CrossCheckReport more = cross_check(
      Distribution::NegativeBinomial, 3, {Rational(1, 10), Rational(1, 2), Rational(1)}, tol10(12));
  CHECK(more.all_pass());
}

TEST_CASE("cross-check: Poisson against the Kummer series") {
  const CrossCheckReport report =
      cross_check(Distribution::Poisson, 1, {Rational(1, 4)}, tol10(10));
  CHECK(report.all_pass());
}

TEST_CASE("Poisson sum three ways within 1e-10") {
  for (long n = 1; n <= 5; ++n)
    for (const Rational& x : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
      const HighFloat direct = power_sum_2({Distribution::Poisson, n, x}, tol10(14)).value;
      const HighFloat series = HighFloat(
          onef1_truncated({Rational(1, 2), Rational(1)}, Rational(-4 * n) * x, tol10(14)).value);
      const HighFloat quad = kn_quadrature(n, x, 64);
      const HighFloat tol(1e-10);
      CHECK(abs(direct - series) <= tol);
      CHECK(abs(direct - quad) <= tol);
      CHECK(abs(series - quad) <= tol);
    }
}
