#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace heunforms {

using BigInt = mpz_class;

/// Exact arbitrary-precision rational, the scalar type of every certification
/// path in this library. Values are always canonical: lowest terms, positive
/// denominator, zero represented as 0/1. No operation ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  /// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static Rational from_string(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;

  double to_double() const { return v_.get_d(); }
  /// Canonical "p/q" form, or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  const mpq_class& raw() const { return v_; }

 private:
  struct RawTag {};
  Rational(mpq_class q, RawTag) : v_(std::move(q)) {}
  static Rational raw(mpq_class q) { return Rational(std::move(q), RawTag{}); }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace heunforms
