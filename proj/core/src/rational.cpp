#include "heunforms/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace heunforms {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
  if (sgn(mpq_class(q.get_den())) == 0)
    throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
  q.canonicalize();
  return Rational::raw(std::move(q));
}

Rational Rational::abs() const { return raw(mpq_class(::abs(v_))); }

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long ue = e > 0 ? static_cast<unsigned long>(e)
                                 : static_cast<unsigned long>(-(e + 1)) + 1;
  BigInt pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(pd.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
  // num and den stay coprime under powers; only the sign needs renormalizing
  // when inverting, which the checked constructor does.
  return e > 0 ? Rational(pn, pd) : Rational(pd, pn);
}

Rational Rational::operator-() const { return raw(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace heunforms
