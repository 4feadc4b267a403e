#include "heunforms/hypergeom.hpp"

#include <stdexcept>

#include "heunforms/combinatorics.hpp"

namespace heunforms {

namespace {

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

long ceil_to_long(const Rational& r) {
  BigInt q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  if (sgn(rem) != 0) q += 1;
  return q.get_si();
}

}  // namespace

void Kummer1F1Spec::validate() const {
  if (is_nonpositive_integer(gamma))
    throw std::invalid_argument("Kummer1F1Spec: gamma must not be a nonpositive integer");
}

bool Kummer1F1Spec::terminates() const { return is_nonpositive_integer(alpha); }

Rational onef1_exact(const Kummer1F1Spec& spec, const Rational& t) {
  spec.validate();
  if (!spec.terminates())
    throw std::invalid_argument("onef1_exact: series does not terminate; use onef1_truncated");
  const long n = static_cast<long>(-spec.alpha.num().get_si());
  Rational sum(0), term(1);
  for (long k = 0; k <= n; ++k) {
    sum += term;
    term = term * (spec.alpha + Rational(k)) / (spec.gamma + Rational(k)) / Rational(k + 1) * t;
  }
  return sum;
}

Polynomial onef1_polynomial(const Kummer1F1Spec& spec) {
  spec.validate();
  if (!spec.terminates())
    throw std::invalid_argument("onef1_polynomial: series does not terminate");
  const long n = static_cast<long>(-spec.alpha.num().get_si());
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  Rational term(1);
  for (long k = 0; k <= n; ++k) {
    c.push_back(term);
    term = term * (spec.alpha + Rational(k)) / (spec.gamma + Rational(k)) / Rational(k + 1);
  }
  return Polynomial(std::move(c));
}

SumApprox onef1_truncated(const Kummer1F1Spec& spec, const Rational& t, const Rational& tol,
                          long max_terms) {
  spec.validate();
  if (tol.sign() <= 0) throw std::invalid_argument("onef1_truncated: tolerance must be positive");
  if (spec.terminates()) {
    const long n = static_cast<long>(-spec.alpha.num().get_si());
    Rational sum(0), term(1);
    for (long k = 0; k <= n; ++k) {
      sum += term;
      term = term * (spec.alpha + Rational(k)) / (spec.gamma + Rational(k)) / Rational(k + 1) * t;
    }
    return {sum, Rational(0), n + 1};
  }

  // Beyond k0 both alpha+k and gamma+k are positive and |t_{k+1}/t_k| is
  // bounded by rho = max((alpha+k)/(gamma+k), 1) * |t|/(k+1), which only
  // shrinks as k grows. Once rho <= 1/2 the tail after t_{k} is at most
  // |t_{k+1}| / (1 - rho).
  const long k0 = std::max({ceil_to_long(-spec.alpha), ceil_to_long(-spec.gamma), 0L}) + 1;
  Rational sum(0), term(1);
  const Rational abs_t = t.abs();
  for (long k = 0; k < max_terms; ++k) {
    sum += term;
    const Rational next =
        term * (spec.alpha + Rational(k)) / (spec.gamma + Rational(k)) / Rational(k + 1) * t;
    if (k + 1 >= k0) {
      const Rational grow = (spec.alpha + Rational(k + 1)) / (spec.gamma + Rational(k + 1));
      const Rational rho = (grow > Rational(1) ? grow : Rational(1)) * abs_t / Rational(k + 2);
      if (rho <= Rational(1, 2)) {
        const Rational bound = next.abs() / (Rational(1) - rho);
        if (bound <= tol) return {sum, bound, k + 1};
      }
    }
    term = next;
  }
  throw std::runtime_error("onef1_truncated: tolerance not reached within the iteration cap");
}

Rational onef1_hermite_case(long n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("onef1_hermite_case: n must be nonnegative");
  const Rational m4x = Rational(-4) * x;
  Rational sum(0);
  for (long k = 0; k <= n; ++k)
    sum += m4x.pow(n - k) / Rational(factorial(k) * factorial(2 * n - 2 * k));
  return Rational(factorial(n)) * sum;
}

void LaguerreSpec::validate() const {
  if (n < 0) throw std::invalid_argument("LaguerreSpec: n must be nonnegative");
  if (lambda <= Rational(-1)) throw std::invalid_argument("LaguerreSpec: lambda must exceed -1");
}

Polynomial laguerre_polynomial(const LaguerreSpec& spec) {
  spec.validate();
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(spec.n) + 1);
  for (long k = 0; k <= spec.n; ++k) {
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    c.push_back(sign * pochhammer(spec.lambda + Rational(k + 1), spec.n - k) /
                Rational(factorial(k) * factorial(spec.n - k)));
  }
  return Polynomial(std::move(c));
}

Rational laguerre(const LaguerreSpec& spec, const Rational& x) {
  return laguerre_polynomial(spec).eval(x);
}

HighFloat kn_quadrature(long n, const Rational& x, long nodes) {
  if (n < 1) throw std::invalid_argument("kn_quadrature: n must be positive");
  if (nodes < 1) throw std::invalid_argument("kn_quadrature: need at least one node");
  const HighFloat pi = HighFloat::pi();
  const HighFloat c = HighFloat(Rational(-2 * n) * x);
  HighFloat acc(0.0);
  for (long i = 1; i <= nodes; ++i) {
    const HighFloat angle =
        HighFloat(Rational(2 * i - 1, 2 * nodes)) * pi;
    acc = acc + exp(c * (HighFloat(1.0) + cos(angle)));
  }
  return acc / HighFloat(Rational(nodes));
}

BigInt kn_deriv_at_zero(long n, long j) {
  if (n < 1) throw std::invalid_argument("kn_deriv_at_zero: n must be positive");
  if (j < 0) throw std::invalid_argument("kn_deriv_at_zero: j must be nonnegative");
  const BigInt direct = Rational(-n).pow(j).num() * binomial(2 * j, j);
  // Moment route: (-2n)^j sum_{i<=j/2} C(j,2i) C(2i,i) 4^{-i}.
  Rational moments(0);
  for (long i = 0; 2 * i <= j; ++i)
    moments += Rational(binomial(j, 2 * i) * binomial(2 * i, i)) / Rational(4).pow(i);
  const Rational via_moments = Rational(-2 * n).pow(j) * moments;
  if (via_moments != Rational(direct))
    throw std::logic_error("kn_deriv_at_zero: moment route disagrees with the closed value");
  return direct;
}

}  // namespace heunforms
