#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heunforms/highfloat.hpp"
#include "heunforms/rational.hpp"

namespace heunforms {

enum class Distribution { Binomial, NegativeBinomial, Poisson };

std::string distribution_name(Distribution d);
std::optional<Distribution> parse_distribution(const std::string& name);

/// Probability family whose order-2 power sum the paper links to a (confluent)
/// Heun evaluation: binomial(n, x) with x in [0,1]; negative binomial(n, x)
/// with x > 0; Poisson with rate n*x, x >= 0. n >= 1 throughout.
struct DistributionFamily {
  Distribution kind;
  long n;
  Rational x;

  void validate() const;
};

/// Order-2 power sum sum_k p_k^2 of the family's probabilities.
struct PowerSum {
  HighFloat value;                // numeric value (exact conversion when exact)
  std::optional<Rational> exact;  // set for the binomial case
  Rational truncation_bound;      // certified |true - value| from truncation; 0 when exact
  long terms;
};

/// Binomial case is an exact finite sum; negative-binomial and Poisson cases
/// are truncated with a certified geometric tail bound <= tol.
PowerSum power_sum_2(const DistributionFamily& family, const Rational& tol);

/// Renyi entropy of order 2: -ln(sum) for sum in (0,1]. Throws
/// std::domain_error on a nonpositive sum.
HighFloat renyi2(const Rational& sum);
HighFloat renyi2(const HighFloat& sum);

struct CrossCheckPoint {
  Rational x;
  std::string sum_value;   // power-sum route
  std::string heun_value;  // closed-form / 1F1 route
  bool exact_match = false;
  HighFloat abs_diff;
  bool pass = false;
};

struct CrossCheckReport {
  Distribution kind;
  long n = 0;
  std::vector<CrossCheckPoint> points;
  bool all_pass() const;
};

/// Compares the power-sum route against the matching Heun evaluation path:
/// binomial against the even-t closed form (exact equality), negative
/// binomial against the Laurent form at the mapped argument -x, Poisson
/// against the Kummer series. Mismatches are findings, not errors.
CrossCheckReport cross_check(Distribution kind, long n, const std::vector<Rational>& points,
                             const Rational& tol);

}  // namespace heunforms
