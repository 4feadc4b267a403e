#pragma once

#include <string>
#include <vector>

#include "heunforms/power_series.hpp"
#include "heunforms/rational.hpp"

namespace heunforms {

struct CfTerm {
  Rational coeff;
  long exponent;  // power of t = 1-2x, may be negative

  friend bool operator==(const CfTerm& a, const CfTerm& b) {
    return a.exponent == b.exponent && a.coeff == b.coeff;
  }
};

/// Finite sum of terms c_j * t^{e_j} with t = 1-2x and integer exponents
/// (possibly negative). Every closed Heun form in this library normalizes to
/// this shape, which makes equality of two forms a finite exact comparison.
/// Terms are kept sorted by exponent, exponents distinct, no zero
/// coefficients.
class ClosedFormExpr {
 public:
  ClosedFormExpr() = default;  // zero
  explicit ClosedFormExpr(std::vector<CfTerm> terms);
  static ClosedFormExpr constant(const Rational& c);
  static ClosedFormExpr t_power(const Rational& c, long exponent);

  const std::vector<CfTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_exponent() const;  // requires nonzero
  long max_exponent() const;
  bool has_negative_exponent() const;
  bool even_in_t() const;  // all exponents even

  /// Value at x = 0, i.e. t = 1: the sum of the coefficients.
  Rational value_at_zero() const;

  /// Exact value at rational x. Throws std::domain_error at the t = 0 pole
  /// (x = 1/2) when a negative exponent is present.
  Rational eval_exact(const Rational& x) const;

  /// Exact value as a function of t itself.
  Rational eval_at_t(const Rational& t) const;

  /// Exact Taylor expansion around x = 0 through the given order. Negative
  /// powers of t expand through the binomial series of (1-2x)^e.
  PowerSeries expand_series(long order) const;

  ClosedFormExpr derivative_t() const;  // d/dt
  ClosedFormExpr operator-() const;

  friend ClosedFormExpr operator+(const ClosedFormExpr& a, const ClosedFormExpr& b);
  friend ClosedFormExpr operator-(const ClosedFormExpr& a, const ClosedFormExpr& b);
  friend ClosedFormExpr operator*(const ClosedFormExpr& a, const ClosedFormExpr& b);
  friend ClosedFormExpr operator*(const Rational& s, const ClosedFormExpr& a);
  friend bool operator==(const ClosedFormExpr& a, const ClosedFormExpr& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;  // e.g. "1/2 + 1/2*t^2"

 private:
  void normalize();
  std::vector<CfTerm> terms_;
};

}  // namespace heunforms
