#include "heunforms/heun_ode.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "heunforms/combinatorics.hpp"

namespace heunforms {

namespace {

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

// Operator coefficients: ops[d] multiplies u^{(d)}.
using OdeOperator = std::array<Polynomial, 3>;

OdeOperator heun_operator(const HeunParams& p) {
  const Rational ep = p.epsilon();
  // x(x-1)(x-a)
  Polynomial p3({Rational(0), p.a, -(p.a + Rational(1)), Rational(1)});
  // gamma(x-1)(x-a) + delta x(x-a) + epsilon x(x-1)
  Polynomial p2({p.gamma * p.a, -(p.gamma * (p.a + Rational(1)) + p.delta * p.a + ep),
                 p.gamma + p.delta + ep});
  Polynomial p1({-p.q, p.alpha * p.beta});
  return {std::move(p1), std::move(p2), std::move(p3)};
}

OdeOperator confluent_operator(const ConfluentHeunParams& p) {
  // x(x-1)
  Polynomial p2({Rational(0), Rational(-1), Rational(1)});
  // 4p x(x-1) + gamma(x-1) + delta x
  Polynomial p1({-p.gamma, p.gamma + p.delta - Rational(4) * p.p, Rational(4) * p.p});
  Polynomial p0({-p.sigma, Rational(4) * p.p * p.alpha});
  return {std::move(p0), std::move(p1), std::move(p2)};
}

PowerSeries apply_operator(const OdeOperator& ops, const PowerSeries& u) {
  PowerSeries acc = mul_poly(u, ops[0]);
  PowerSeries du = u;
  for (int d = 1; d <= 2; ++d) {
    du = du.derivative();
    acc = acc + mul_poly(du, ops[d]);
  }
  return acc;
}

// Solves L[u] = 0 for the analytic branch with u(0) = 1 by zeroing each power
// of x in turn. Requires ord_x(ops[d]) >= d-1 so that the coefficient of x^m
// involves nothing beyond c_{m+1}: true for both cleared Heun operators, whose
// origin is a regular singular point.
std::vector<Rational> frobenius_solve(const OdeOperator& ops, long order) {
  for (int d = 0; d <= 2; ++d)
    for (long s = 0; s < d - 1; ++s)
      if (!ops[d].coeff(s).is_zero())
        throw std::invalid_argument("frobenius_solve: x = 0 is not a regular singular point");

  std::vector<Rational> c{Rational(1)};
  c.reserve(static_cast<std::size_t>(order) + 1);
  for (long m = 0; m < order; ++m) {
    Rational lead(0), known(0);
    for (int d = 0; d <= 2; ++d) {
      for (long s = 0; s <= ops[d].degree(); ++s) {
        const Rational ps = ops[d].coeff(s);
        if (ps.is_zero()) continue;
        const long k = m + d - s;
        if (k < 0 || k > m + 1) continue;
        Rational ff(1);  // k(k-1)...(k-d+1)
        for (int t = 0; t < d; ++t) ff *= Rational(k - t);
        if (ff.is_zero()) continue;
        if (k == m + 1)
          lead += ps * ff;
        else
          known += ps * ff * c[static_cast<std::size_t>(k)];
      }
    }
    if (lead.is_zero())
      throw std::domain_error("frobenius_solve: vanishing leading coefficient at order " +
                              std::to_string(m + 1));
    c.push_back(-known / lead);
  }
  return c;
}

PowerSeries solve_certified(const OdeOperator& ops, long order) {
  if (order < 2) throw std::invalid_argument("series order must be at least 2");
  PowerSeries u(frobenius_solve(ops, order));
  if (!apply_operator(ops, u).is_zero())
    throw std::logic_error("frobenius_solve: residual self-check failed");
  return u;
}

Rational half() { return Rational(1, 2); }

}  // namespace

void HeunParams::validate() const {
  if (a.is_zero() || a == Rational(1))
    throw std::invalid_argument("HeunParams: a must differ from 0 and 1");
  if (is_nonpositive_integer(gamma))
    throw std::invalid_argument("HeunParams: gamma must not be a nonpositive integer");
}

std::string HeunParams::str() const {
  std::ostringstream os;
  os << "Hl(" << a << "," << q << ";" << alpha << "," << beta << ";" << gamma << "," << delta
     << ")";
  return os.str();
}

void ConfluentHeunParams::validate() const {
  if (p.is_zero()) throw std::invalid_argument("ConfluentHeunParams: p must be nonzero");
  if (is_nonpositive_integer(gamma))
    throw std::invalid_argument("ConfluentHeunParams: gamma must not be a nonpositive integer");
}

std::string ConfluentHeunParams::str() const {
  std::ostringstream os;
  os << "HC(" << p << "," << gamma << "," << delta << "," << alpha << "," << sigma << ")";
  return os.str();
}

PowerSeries heun_series(const HeunParams& params, long order) {
  params.validate();
  return solve_certified(heun_operator(params), order);
}

PowerSeries confluent_series(const ConfluentHeunParams& params, long order) {
  params.validate();
  return solve_certified(confluent_operator(params), order);
}

PowerSeries ode_residual_general(const PowerSeries& u, const HeunParams& params) {
  params.validate();
  return apply_operator(heun_operator(params), u);
}

PowerSeries ode_residual_confluent(const PowerSeries& u, const ConfluentHeunParams& params) {
  params.validate();
  return apply_operator(confluent_operator(params), u);
}

Polynomial ode_residual_confluent(const Polynomial& u, const ConfluentHeunParams& params) {
  params.validate();
  const OdeOperator ops = confluent_operator(params);
  Polynomial acc = ops[0] * u;
  Polynomial du = u;
  for (int d = 1; d <= 2; ++d) {
    du = du.derivative();
    acc = acc + ops[d] * du;
  }
  return acc;
}

ClosedFormExpr ode_residual_general(const ClosedFormExpr& u, const HeunParams& params) {
  params.validate();
  if (params.a != half())
    throw std::domain_error(
        "ode_residual_general: t-Laurent candidates are only handled for a = 1/2");
  const Rational ep = params.epsilon();
  // Under x = (1-t)/2 the cleared operator becomes
  //   (1/2) t (1-t^2) u_tt
  //   - (1/2) [gamma t(1+t) - delta t(1-t) - epsilon (1-t^2)] u_t
  //   + [alpha*beta (1-t)/2 - q] u
  // with u_t, u_tt derivatives in t.
  const ClosedFormExpr l2({{half(), 1}, {-half(), 3}});
  const ClosedFormExpr l1({{ep * half(), 0},
                           {-(params.gamma - params.delta) * half(), 1},
                           {-(params.gamma + params.delta + ep) * half(), 2}});
  const ClosedFormExpr l0(
      {{params.alpha * params.beta * half() - params.q, 0}, {-params.alpha * params.beta * half(), 1}});
  const ClosedFormExpr ut = u.derivative_t();
  const ClosedFormExpr utt = ut.derivative_t();
  return l2 * utt + l1 * ut + l0 * u;
}

namespace {

RelationCheck compare(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries diff = lhs - rhs;
  return {diff.is_zero(), diff.order(), std::move(diff)};
}

}  // namespace

RelationCheck check_derivative_relation(DerivativeRelation rel, const HeunParams& base,
                                        long order) {
  if (rel != DerivativeRelation::Hl_2_1 && rel != DerivativeRelation::Hl_2_11)
    throw std::invalid_argument("check_derivative_relation: confluent relation needs a j argument");
  if (order < 10) throw std::invalid_argument("check_derivative_relation: order must be >= 10");
  base.validate();
  if (base.a != half())
    throw std::invalid_argument("check_derivative_relation: base must have a = 1/2");
  if (base.gamma != base.delta)
    throw std::invalid_argument("check_derivative_relation: base must have delta = gamma");
  const Rational ab = base.alpha * base.beta;
  if (ab.is_zero())
    throw std::invalid_argument("check_derivative_relation: alpha*beta must be nonzero");
  if (base.q != ab * half())
    throw std::invalid_argument("check_derivative_relation: base must have q = alpha*beta/2");

  HeunParams derived;
  Rational prefactor_exponent;
  if (rel == DerivativeRelation::Hl_2_1) {
    const Rational a2 = base.alpha + Rational(2), b2 = base.beta + Rational(2);
    derived = {half(), a2 * b2 * half(), a2, b2, base.gamma + Rational(1), base.gamma + Rational(1)};
    prefactor_exponent = Rational(-1);
  } else {
    const Rational a2 = Rational(2) * base.gamma - base.alpha;
    const Rational b2 = Rational(2) * base.gamma - base.beta;
    derived = {half(), a2 * b2 * half(), a2, b2, base.gamma + Rational(1), base.gamma + Rational(1)};
    prefactor_exponent = base.alpha + base.beta + Rational(1) - Rational(2) * base.gamma;
  }

  const PowerSeries lhs = heun_series(derived, order);
  const PowerSeries dbase = heun_series(base, order + 1).derivative();
  const PowerSeries rhs =
      (base.gamma / ab) * (binomial_power_series(prefactor_exponent, order) * dbase);
  return compare(lhs, rhs);
}

RelationCheck check_derivative_relation(DerivativeRelation rel, const ConfluentHeunParams& base,
                                        long j, long order) {
  if (rel != DerivativeRelation::Hc_3_4 && rel != DerivativeRelation::Hc_3_5)
    throw std::invalid_argument("check_derivative_relation: Heun relation takes no j argument");
  if (order < 10) throw std::invalid_argument("check_derivative_relation: order must be >= 10");
  base.validate();
  if (!base.delta.is_zero())
    throw std::invalid_argument("check_derivative_relation: base must have delta = 0");
  if (base.sigma != Rational(4) * base.p * base.alpha)
    throw std::invalid_argument("check_derivative_relation: base must have sigma = 4*p*alpha");
  if (base.alpha.is_zero())
    throw std::invalid_argument("check_derivative_relation: alpha*p must be nonzero");
  if (rel == DerivativeRelation::Hc_3_4) j = 1;
  if (j < 0) throw std::invalid_argument("check_derivative_relation: j must be nonnegative");
  if (pochhammer(base.alpha, j).is_zero())
    throw std::invalid_argument("check_derivative_relation: (alpha)_j must be nonzero");

  const Rational aj = base.alpha + Rational(j);
  const ConfluentHeunParams derived{base.p, base.gamma + Rational(j), Rational(0), aj,
                                    Rational(4) * base.p * aj};
  const PowerSeries lhs = confluent_series(derived, order);

  PowerSeries d = confluent_series(base, order + j);
  for (long i = 0; i < j; ++i) d = d.derivative();
  const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational coef = sign * pochhammer(base.gamma, j) /
                        ((Rational(4) * base.p).pow(j) * pochhammer(base.alpha, j));
  return compare(lhs, coef * d);
}

}  // namespace heunforms
