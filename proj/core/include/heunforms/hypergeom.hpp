#pragma once

#include "heunforms/highfloat.hpp"
#include "heunforms/polynomial.hpp"
#include "heunforms/rational.hpp"

namespace heunforms {

/// Kummer series 1F1(alpha; gamma; t) = sum (alpha)_k / ((gamma)_k k!) t^k.
struct Kummer1F1Spec {
  Rational alpha;
  Rational gamma;  // not a nonpositive integer

  void validate() const;
  /// True when alpha is a nonpositive integer -n: the series terminates at
  /// degree n and evaluation is exact.
  bool terminates() const;
};

/// Exact value of a terminating Kummer series at rational t.
Rational onef1_exact(const Kummer1F1Spec& spec, const Rational& t);

/// Terminating Kummer series as an exact polynomial in t.
Polynomial onef1_polynomial(const Kummer1F1Spec& spec);

struct SumApprox {
  Rational value;       // exact partial sum
  Rational tail_bound;  // certified bound on |true value - value|
  long terms;
};

/// Truncated Kummer series with a certified geometric tail bound. Terms are
/// accumulated exactly in rationals, so cancellation between the large
/// alternating terms of 1F1(1/2;1;-4nx) costs no precision; the single
/// rounding happens when the caller converts the result.
SumApprox onef1_truncated(const Kummer1F1Spec& spec, const Rational& t, const Rational& tol,
                          long max_terms = 1000000);

/// Hermite-case reduction: n! * sum_{k=0..n} (-4x)^{n-k} / (k! (2n-2k)!),
/// equal to 1F1(-n; 1/2; x).
Rational onef1_hermite_case(long n, const Rational& x);

struct LaguerreSpec {
  long n;           // degree, >= 0
  Rational lambda;  // > -1
  void validate() const;
};

/// L_n^lambda(x) = sum_k (-1)^k (lambda+k+1)_{n-k} / (k! (n-k)!) x^k, exact.
Rational laguerre(const LaguerreSpec& spec, const Rational& x);
Polynomial laguerre_polynomial(const LaguerreSpec& spec);

/// Gauss-Chebyshev approximation of
///   K_n(x) = (1/pi) * integral_{-1}^{1} e^{-2nx(1+t)} dt / sqrt(1-t^2)
/// with M nodes: (1/M) sum_i f(cos((2i-1)pi/(2M))). The integrand is entire,
/// so doubling M is a cheap convergence check on the default.
HighFloat kn_quadrature(long n, const Rational& x, long nodes = 64);

/// K_n^{(j)}(0) = (-n)^j C(2j,j), re-derived independently from the moment
/// expansion (-2n)^j sum_i C(j,2i) C(2i,i) 4^{-i} and cross-asserted before
/// returning.
BigInt kn_deriv_at_zero(long n, long j);

}  // namespace heunforms
