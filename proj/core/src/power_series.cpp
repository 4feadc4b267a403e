#include "heunforms/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace heunforms {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
}

PowerSeries PowerSeries::zero(long order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, long order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
  for (long k = 0; k <= std::min(order, p.degree()); ++k) v[static_cast<std::size_t>(k)] = p.coeff(k);
  return PowerSeries(std::move(v));
}

const Rational& PowerSeries::operator[](long k) const {
  if (k < 0 || k > order()) throw std::invalid_argument("PowerSeries: coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

bool PowerSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

PowerSeries PowerSeries::truncated(long new_order) const {
  if (new_order < 0 || new_order > order())
    throw std::invalid_argument("PowerSeries: invalid truncation order");
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) throw std::invalid_argument("PowerSeries: cannot differentiate an order-0 series");
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * c_[k]);
  return PowerSeries(std::move(d));
}

Rational PowerSeries::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const long n = std::min(a.order(), b.order());
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[k] + b[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const long n = std::min(a.order(), b.order());
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a[k] - b[k];
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const long n = std::min(a.order(), b.order());
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
  for (long i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; i + j <= n; ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return PowerSeries(std::move(v));
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  std::vector<Rational> v;
  v.reserve(a.c_.size());
  for (const auto& c : a.c_) v.push_back(s * c);
  return PowerSeries(std::move(v));
}

PowerSeries mul_poly(const PowerSeries& a, const Polynomial& p) {
  const long n = a.order();
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
  for (long s = 0; s <= std::min(n, p.degree()); ++s) {
    const Rational ps = p.coeff(s);
    if (ps.is_zero()) continue;
    for (long k = 0; k + s <= n; ++k) v[static_cast<std::size_t>(k + s)] += ps * a[k];
  }
  return PowerSeries(std::move(v));
}

PowerSeries binomial_power_series(const Rational& exponent, long order) {
  if (order < 0) throw std::invalid_argument("binomial_power_series: negative order");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(order) + 1);
  Rational f(1);  // falling(e,k)/k! * (-2)^k
  for (long k = 0; k <= order; ++k) {
    v.push_back(f);
    f = f * (exponent - Rational(k)) / Rational(k + 1) * Rational(-2);
  }
  return PowerSeries(std::move(v));
}

}  // namespace heunforms
