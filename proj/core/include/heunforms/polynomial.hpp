#pragma once

#include <string>
#include <vector>

#include "heunforms/rational.hpp"

namespace heunforms {

/// Dense exact polynomial in x. Coefficient k multiplies x^k. The zero
/// polynomial is the empty coefficient list; nonzero polynomials carry no
/// trailing zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, long degree);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(long k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace heunforms
