#include "heunforms/entropy.hpp"

#include <stdexcept>

#include "heunforms/catalog.hpp"
#include "heunforms/hypergeom.hpp"

namespace heunforms {

std::string distribution_name(Distribution d) {
  switch (d) {
    case Distribution::Binomial: return "binomial";
    case Distribution::NegativeBinomial: return "negbinomial";
    case Distribution::Poisson: return "poisson";
  }
  return "?";
}

std::optional<Distribution> parse_distribution(const std::string& name) {
  if (name == "binomial") return Distribution::Binomial;
  if (name == "negbinomial") return Distribution::NegativeBinomial;
  if (name == "poisson") return Distribution::Poisson;
  return std::nullopt;
}

void DistributionFamily::validate() const {
  if (n < 1) throw std::invalid_argument("DistributionFamily: n must be >= 1");
  switch (kind) {
    case Distribution::Binomial:
      if (x < Rational(0) || x > Rational(1))
        throw std::invalid_argument("DistributionFamily: binomial needs x in [0,1]");
      break;
    case Distribution::NegativeBinomial:
      if (x.sign() <= 0)
        throw std::invalid_argument("DistributionFamily: negative binomial needs x > 0");
      break;
    case Distribution::Poisson:
      if (x.sign() < 0) throw std::invalid_argument("DistributionFamily: Poisson needs x >= 0");
      break;
  }
}

PowerSum power_sum_2(const DistributionFamily& family, const Rational& tol) {
  family.validate();
  switch (family.kind) {
    case Distribution::Binomial: {
      const Rational exact = index_sum_13(family.n, family.x);
      return {HighFloat(exact), exact, Rational(0), family.n + 1};
    }
    case Distribution::NegativeBinomial: {
      const TailSum s = index_sum_14(family.n, family.x, tol);
      return {HighFloat(s.value), std::nullopt, s.tail_bound, s.terms};
    }
    case Distribution::Poisson: {
      // sum (e^{-nx} (nx)^k / k!)^2 = e^{-2nx} * sum (nx)^{2k} / (k!)^2. The
      // series factor accumulates exactly; the single exponential enters in
      // 256-bit arithmetic at the end. The ratio (nx)^2/(k+1)^2 gives the
      // geometric tail, and e^{-2nx} <= 1 keeps the stated bound valid.
      const Rational rate = Rational(family.n) * family.x;
      if (rate.is_zero()) return {HighFloat(Rational(1)), std::nullopt, Rational(0), 1};
      if (tol.sign() <= 0) throw std::invalid_argument("power_sum_2: tolerance must be positive");
      const Rational rate2 = rate * rate;
      Rational term(1), sum(0);
      long k = 0;
      for (; k < 1000000; ++k) {
        sum += term;
        const Rational rho = rate2 / Rational((k + 1) * (k + 1));
        const Rational next = term * rho;
        if (rho < Rational(1, 2)) {
          const Rational bound = next / (Rational(1) - rho);
          if (bound <= tol) {
            const HighFloat value = exp(HighFloat(Rational(-2) * rate)) * HighFloat(sum);
            return {value, std::nullopt, bound, k + 1};
          }
        }
        term = next;
      }
      throw std::runtime_error("power_sum_2: tolerance not reached within the iteration cap");
    }
  }
  throw std::logic_error("power_sum_2: unreachable");
}

HighFloat renyi2(const Rational& sum) {
  if (sum.sign() <= 0) throw std::domain_error("renyi2: power sum must be positive");
  return -log(HighFloat(sum));
}

HighFloat renyi2(const HighFloat& sum) {
  if (sum <= HighFloat(0.0)) throw std::domain_error("renyi2: power sum must be positive");
  return -log(sum);
}

bool CrossCheckReport::all_pass() const {
  for (const auto& p : points)
    if (!p.pass) return false;
  return true;
}

CrossCheckReport cross_check(Distribution kind, long n, const std::vector<Rational>& points,
                             const Rational& tol) {
  CrossCheckReport report;
  report.kind = kind;
  report.n = n;
  const HighFloat tol_hf(tol);
  for (const Rational& x : points) {
    CrossCheckPoint pt{};
    pt.x = x;
    switch (kind) {
      case Distribution::Binomial: {
        const Rational lhs = index_sum_13(n, x);
        const Rational rhs = hl_closed_form(HlFamilyId::F2_2, n).primary.eval_exact(x);
        pt.sum_value = lhs.str();
        pt.heun_value = rhs.str();
        pt.exact_match = lhs == rhs;
        pt.abs_diff = HighFloat(Rational((lhs - rhs).abs()));
        pt.pass = pt.exact_match;
        break;
      }
      case Distribution::NegativeBinomial: {
        // The paper's family is evaluated at -x: t = 1+2x, an exact Laurent
        // value, so the only slack is the certified truncation of the sum.
        const TailSum lhs = index_sum_14(n, x, tol / Rational(2));
        const Rational rhs =
            hl_closed_form(HlFamilyId::F2_8, n - 1).primary.eval_exact(-x);
        const Rational diff = (lhs.value - rhs).abs();
        pt.sum_value = lhs.value.str();
        pt.heun_value = rhs.str();
        pt.abs_diff = HighFloat(diff);
        pt.pass = diff <= tol;
        break;
      }
      case Distribution::Poisson: {
        const PowerSum lhs = power_sum_2({kind, n, x}, tol / Rational(4));
        const SumApprox rhs = onef1_truncated({Rational(1, 2), Rational(1)},
                                              Rational(-4 * n) * x, tol / Rational(4));
        pt.sum_value = lhs.value.str();
        pt.heun_value = HighFloat(rhs.value).str();
        pt.abs_diff = abs(lhs.value - HighFloat(rhs.value));
        pt.pass = pt.abs_diff <= tol_hf;
        break;
      }
    }
    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace heunforms
