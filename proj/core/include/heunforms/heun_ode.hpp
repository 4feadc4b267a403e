#pragma once

#include <string>

#include "heunforms/closed_form.hpp"
#include "heunforms/power_series.hpp"
#include "heunforms/rational.hpp"

namespace heunforms {

/// Parameters of the general Heun equation
///   u'' + (gamma/x + delta/(x-1) + epsilon/(x-a)) u'
///      + (alpha*beta*x - q) / (x(x-1)(x-a)) u = 0,
/// with a not in {0,1}, gamma not a nonpositive integer, and epsilon tied by
/// the Fuchs condition alpha+beta+1 = gamma+delta+epsilon.
struct HeunParams {
  Rational a;
  Rational q;
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;

  Rational epsilon() const { return alpha + beta + Rational(1) - gamma - delta; }
  void validate() const;  // throws std::invalid_argument
  std::string str() const;
};

/// Parameters of the confluent Heun equation
///   u'' + (4p + gamma/x + delta/(x-1)) u' + (4p*alpha*x - sigma)/(x(x-1)) u = 0,
/// with p != 0 and gamma not a nonpositive integer.
struct ConfluentHeunParams {
  Rational p;
  Rational gamma;
  Rational delta;
  Rational alpha;
  Rational sigma;

  void validate() const;
  std::string str() const;
};

/// Local solution of the general Heun equation normalized by u(0) = 1, as an
/// exact truncated series. The coefficient recurrence is derived by
/// substituting the series into the equation cleared by x(x-1)(x-a); the
/// result is re-certified against ode_residual_general before returning, so a
/// slip in the solver cannot silently corrupt downstream exact claims.
PowerSeries heun_series(const HeunParams& params, long order);

/// Local solution of the confluent Heun equation normalized by u(0) = 1
/// (equation cleared by x(x-1)), certified the same way.
PowerSeries confluent_series(const ConfluentHeunParams& params, long order);

/// Applies the cleared general Heun operator
///   L[u] = x(x-1)(x-a) u'' + [gamma(x-1)(x-a) + delta x(x-a) + epsilon x(x-1)] u'
///        + (alpha*beta*x - q) u
/// to a truncated series. The result is valid through order N-2.
PowerSeries ode_residual_general(const PowerSeries& u, const HeunParams& params);

/// Same operator applied to a t-Laurent closed form (t = 1-2x). Exact:
/// identically zero result certifies the candidate as a solution. Only
/// a = 1/2 is supported here, which places every finite singularity of the
/// paper's families at t = 0; other a would put a pole outside the t-frame.
ClosedFormExpr ode_residual_general(const ClosedFormExpr& u, const HeunParams& params);

/// Cleared confluent operator
///   L[u] = x(x-1) u'' + [4p x(x-1) + gamma (x-1) + delta x] u' + (4p*alpha*x - sigma) u
/// applied to a truncated series (valid through N-2) or, exactly, to a
/// polynomial candidate.
PowerSeries ode_residual_confluent(const PowerSeries& u, const ConfluentHeunParams& params);
Polynomial ode_residual_confluent(const Polynomial& u, const ConfluentHeunParams& params);

/// Derivative ladder relations between normalized local solutions.
enum class DerivativeRelation {
  Hl_2_1,   // (gamma,gamma) ladder with prefactor (1-2x)^{-1}
  Hl_2_11,  // (gamma,gamma) ladder with prefactor (1-2x)^{alpha+beta+1-2gamma}
  Hc_3_4,   // confluent one-step ladder
  Hc_3_5,   // confluent j-step ladder
};

struct RelationCheck {
  bool equal;
  long compared_order;
  PowerSeries difference;  // lhs - rhs, coefficientwise
};

/// Checks Hl_2_1 / Hl_2_11 for a base Heun function with a = 1/2,
/// delta = gamma, q = alpha*beta/2 and alpha*beta != 0. Both sides are built
/// as exact truncated series and compared coefficientwise through `order`
/// (order >= 10 so the check is meaningful).
RelationCheck check_derivative_relation(DerivativeRelation rel, const HeunParams& base, long order);

/// Checks Hc_3_4 (j fixed to 1) / Hc_3_5 for a base confluent function with
/// delta = 0, sigma = 4*p*alpha, alpha*p != 0 and (alpha)_j != 0.
RelationCheck check_derivative_relation(DerivativeRelation rel, const ConfluentHeunParams& base,
                                        long j, long order);

}  // namespace heunforms
