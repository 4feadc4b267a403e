#pragma once

#include <vector>

#include "heunforms/polynomial.hpp"
#include "heunforms/rational.hpp"

namespace heunforms {

/// Truncated dense power series around x = 0 with exact rational coefficients.
/// A series of order N carries coefficients 0..N; coefficients beyond N are
/// unknown, not zero. Arithmetic propagates the minimum valid truncation order
/// of its inputs, and differentiation lowers the order by exactly one, so an
/// insufficient order surfaces as an error instead of silently wrong
/// coefficients.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Rational> coeffs);
  static PowerSeries zero(long order);
  static PowerSeries from_polynomial(const Polynomial& p, long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& operator[](long k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  PowerSeries truncated(long new_order) const;
  PowerSeries derivative() const;  // order decreases by 1; order-0 input is an error

  /// Horner evaluation of the truncated polynomial part (no tail).
  Rational eval(const Rational& x) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);
  /// Polynomial factors are exact, so the order is preserved.
  friend PowerSeries mul_poly(const PowerSeries& a, const Polynomial& p);

  /// Coefficientwise equality including the truncation order.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

/// Exact Taylor expansion of (1-2x)^e around x = 0 through the given order,
/// valid for any rational exponent via the generalized binomial series.
PowerSeries binomial_power_series(const Rational& exponent, long order);

}  // namespace heunforms
