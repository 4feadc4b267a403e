#include "heunforms/closed_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace heunforms {

ClosedFormExpr::ClosedFormExpr(std::vector<CfTerm> terms) : terms_(std::move(terms)) { normalize(); }

void ClosedFormExpr::normalize() {
  std::map<long, Rational> merged;
  for (const auto& t : terms_) {
    auto [it, inserted] = merged.emplace(t.exponent, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  terms_.clear();
  for (const auto& [e, c] : merged)
    if (!c.is_zero()) terms_.push_back({c, e});
}

ClosedFormExpr ClosedFormExpr::constant(const Rational& c) { return ClosedFormExpr({{c, 0}}); }

ClosedFormExpr ClosedFormExpr::t_power(const Rational& c, long exponent) {
  return ClosedFormExpr({{c, exponent}});
}

long ClosedFormExpr::min_exponent() const {
  if (is_zero()) throw std::logic_error("ClosedFormExpr: zero expression has no exponents");
  return terms_.front().exponent;
}

long ClosedFormExpr::max_exponent() const {
  if (is_zero()) throw std::logic_error("ClosedFormExpr: zero expression has no exponents");
  return terms_.back().exponent;
}

bool ClosedFormExpr::has_negative_exponent() const {
  return !is_zero() && terms_.front().exponent < 0;
}

bool ClosedFormExpr::even_in_t() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const CfTerm& t) { return t.exponent % 2 == 0; });
}

Rational ClosedFormExpr::value_at_zero() const {
  Rational s(0);
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Rational ClosedFormExpr::eval_at_t(const Rational& t) const {
  if (t.is_zero()) {
    if (has_negative_exponent())
      throw std::domain_error("ClosedFormExpr: pole at x = 1/2 (t = 0)");
    Rational s(0);
    for (const auto& term : terms_)
      if (term.exponent == 0) s += term.coeff;
    return s;
  }
  Rational s(0);
  for (const auto& term : terms_) s += term.coeff * t.pow(term.exponent);
  return s;
}

Rational ClosedFormExpr::eval_exact(const Rational& x) const {
  return eval_at_t(Rational(1) - Rational(2) * x);
}

PowerSeries ClosedFormExpr::expand_series(long order) const {
  if (order < 0) throw std::invalid_argument("ClosedFormExpr: negative expansion order");
  PowerSeries acc = PowerSeries::zero(order);
  for (const auto& term : terms_)
    acc = acc + term.coeff * binomial_power_series(Rational(term.exponent), order);
  return acc;
}

ClosedFormExpr ClosedFormExpr::derivative_t() const {
  std::vector<CfTerm> out;
  for (const auto& term : terms_) {
    if (term.exponent == 0) continue;
    out.push_back({Rational(term.exponent) * term.coeff, term.exponent - 1});
  }
  return ClosedFormExpr(std::move(out));
}

ClosedFormExpr ClosedFormExpr::operator-() const { return Rational(-1) * *this; }

ClosedFormExpr operator+(const ClosedFormExpr& a, const ClosedFormExpr& b) {
  std::vector<CfTerm> v = a.terms_;
  v.insert(v.end(), b.terms_.begin(), b.terms_.end());
  return ClosedFormExpr(std::move(v));
}

ClosedFormExpr operator-(const ClosedFormExpr& a, const ClosedFormExpr& b) { return a + (-b); }

ClosedFormExpr operator*(const ClosedFormExpr& a, const ClosedFormExpr& b) {
  std::vector<CfTerm> v;
  v.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) v.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
  return ClosedFormExpr(std::move(v));
}

ClosedFormExpr operator*(const Rational& s, const ClosedFormExpr& a) {
  std::vector<CfTerm> v;
  v.reserve(a.terms_.size());
  for (const auto& t : a.terms_) v.push_back({s * t.coeff, t.exponent});
  return ClosedFormExpr(std::move(v));
}

std::string ClosedFormExpr::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    os << t.coeff.str();
    if (t.exponent != 0) os << "*t^" << t.exponent;
    first = false;
  }
  return os.str();
}

}  // namespace heunforms
