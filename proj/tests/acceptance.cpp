// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds. Each bound and tolerance is pinned in code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heunforms/catalog.hpp"
#include "heunforms/combinatorics.hpp"
#include "heunforms/entropy.hpp"
#include "heunforms/heun_ode.hpp"
#include "heunforms/hypergeom.hpp"
#include "heunforms/identities.hpp"

using namespace heunforms;

namespace {

Rational tol10(long e) { return Rational(10).pow(-e); }

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

// 1. Every cataloged identity, every admissible tuple with free parameters
// <= 30, zero failures.
bool identity_sweep(std::string& detail) {
  const auto reports = sweep(identity_ids(), {30, 0});
  long cases = 0, failures = 0;
  for (const auto& r : reports) {
    cases += r.case_count();
    failures += r.failure_count();
  }
  std::ostringstream os;
  os << cases << " cases, " << failures << " failures";
  detail = os.str();
  return failures == 0;
}

// 2. ODE residual identically zero for the seven unconditioned families with
// n <= 15 and all admissible m/k; family 2.21 runs separately and reports
// findings instead of crashing.
bool ode_certification(std::string& detail) {
  CertifyOptions options;
  options.max_n = 15;
  long members = 0;
  bool ok = true;
  for (HlFamilyId id : {HlFamilyId::F2_2, HlFamilyId::F2_3, HlFamilyId::F2_8, HlFamilyId::F2_T4,
                        HlFamilyId::F2_12, HlFamilyId::F2_15, HlFamilyId::F2_20}) {
    const FamilyReport report = certify_family(id, options);
    members += static_cast<long>(report.members.size());
    ok = ok && report.all_pass();
  }
  const FamilyReport separate = certify_family(HlFamilyId::F2_21, options);
  std::ostringstream os;
  os << members << " members certified; family 2.21 separately: ";
  if (separate.all_pass()) {
    os << separate.members.size() << " members certified";
  } else {
    os << separate.failure_count() << " flagged finding(s)";
    for (const auto& m : separate.members)
      if (!m.pass()) os << " [" << m.member << ": " << m.note << "]";
  }
  detail = os.str();
  return ok;
}

// 3. Both displayed forms of 2.3, 2.12, 2.15, 2.20, 2.21 agree exactly as
// t-expressions for n <= 15 (construction asserts term-by-term equality).
bool dual_forms(std::string& detail) {
  long members = 0;
  try {
    for (long n = 0; n <= 15; ++n) {
      for (long m = 0; m <= n; ++m, ++members) hl_closed_form(HlFamilyId::F2_3, n, m);
      for (long k = 0; k <= n; ++k, ++members) {
        hl_closed_form(HlFamilyId::F2_12, n, k);
        hl_closed_form(HlFamilyId::F2_20, n, k);
        hl_closed_form(HlFamilyId::F2_21, n, k);
        members += 2;
      }
      for (long k = 1; k <= n; ++k, ++members) hl_closed_form(HlFamilyId::F2_15, n, k);
    }
  } catch (const CertificationError& e) {
    detail = e.what();
    return false;
  }
  detail = std::to_string(members) + " dual-form members compared";
  return true;
}

// 4. heun_series equals the closed-form expansion coefficientwise to order 30
// for families 2.2 and 2.3, n <= 10, all m.
bool series_agreement(std::string& detail) {
  long checked = 0;
  for (long n = 0; n <= 10; ++n) {
    const HlForm even = hl_closed_form(HlFamilyId::F2_2, n);
    if (!(heun_series(even.params, 30) == even.primary.expand_series(30))) {
      detail = "family 2.2 mismatch at n=" + std::to_string(n);
      return false;
    }
    ++checked;
    for (long m = 0; m <= n; ++m, ++checked) {
      const HlForm f = hl_closed_form(HlFamilyId::F2_3, n, m);
      if (!(heun_series(f.params, 30) == f.primary.expand_series(30))) {
        detail = "family 2.3 mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " members to order 30";
  return true;
}

// 5. The local solution of the K_n member reproduces the derivative values
// (-n)^j C(2j,j) for j <= 10, n <= 5; the independent moment-route
// recomputation agrees for j <= 60.
bool confluent_chain(std::string& detail) {
  for (long n = 1; n <= 5; ++n) {
    const ConfluentHeunParams kn{Rational(n), Rational(1), Rational(0), Rational(1, 2),
                                 Rational(2 * n)};
    const PowerSeries s = confluent_series(kn, 12);
    for (long j = 0; j <= 10; ++j) {
      const Rational expected = Rational(-n).pow(j) * Rational(binomial(2 * j, j));
      if (!(Rational(factorial(j)) * s[j] == expected)) {
        detail = "derivative mismatch at n=" + std::to_string(n) + " j=" + std::to_string(j);
        return false;
      }
    }
    // kn_deriv_at_zero cross-asserts the moment expansion internally.
    for (long j = 0; j <= 60; ++j) {
      if (!(Rational(kn_deriv_at_zero(n, j)) ==
            Rational(-n).pow(j) * Rational(binomial(2 * j, j)))) {
        detail = "moment route mismatch at n=" + std::to_string(n) + " j=" + std::to_string(j);
        return false;
      }
    }
  }
  for (long j = 0; j <= 60; ++j)
    if (!verify_identity("3.99", {j}).pass) {
      detail = "identity 3.99 fails at j=" + std::to_string(j);
      return false;
    }
  detail = "derivatives j <= 10 (n <= 5) and moment identity j <= 60";
  return true;
}

// 6. Kummer series, 64-node Gauss-Chebyshev quadrature and the truncated
// squared-Poisson sum pairwise agree within 1e-10 for n <= 5,
// x in {0, 1/4, 1/2, 1}.
bool triple_agreement(std::string& detail) {
  const HighFloat tol(1e-10);
  long points = 0;
  for (long n = 1; n <= 5; ++n)
    for (const Rational& x : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
      const HighFloat series = HighFloat(
          onef1_truncated({Rational(1, 2), Rational(1)}, Rational(-4 * n) * x, tol10(14)).value);
      const HighFloat quad = kn_quadrature(n, x, 64);
      const HighFloat poisson = power_sum_2({Distribution::Poisson, n, x}, tol10(14)).value;
      if (!(abs(series - quad) <= tol && abs(series - poisson) <= tol &&
            abs(quad - poisson) <= tol)) {
        detail = "disagreement at n=" + std::to_string(n) + " x=" + x.str();
        return false;
      }
      ++points;
    }
  detail = std::to_string(points) + " (n, x) points, three routes each";
  return true;
}

// 7. The four derivative ladders hold coefficientwise to order 25 on the
// cataloged families with n <= 8 (j <= 5 for the confluent ladder).
bool derivative_ladders(std::string& detail) {
  const long order = 25;
  long checks = 0;
  auto check_hl = [&](const HeunParams& base) {
    if ((base.alpha * base.beta).is_zero()) return true;
    ++checks;
    if (!check_derivative_relation(DerivativeRelation::Hl_2_1, base, order).equal) return false;
    ++checks;
    return check_derivative_relation(DerivativeRelation::Hl_2_11, base, order).equal;
  };
  for (long n = 0; n <= 8; ++n) {
    if (!check_hl(hl_closed_form(HlFamilyId::F2_2, n).params)) { detail = "2.1/2.11 fail on family 2.2"; return false; }
    if (!check_hl(hl_closed_form(HlFamilyId::F2_8, n).params)) { detail = "2.1/2.11 fail on family 2.8"; return false; }
    for (long m = 0; m <= n; ++m)
      if (!check_hl(hl_closed_form(HlFamilyId::F2_3, n, m).params)) { detail = "fail on family 2.3"; return false; }
    for (long m = 0; m <= 8; ++m)
      if (!check_hl(hl_closed_form(HlFamilyId::F2_T4, n, m).params)) { detail = "fail on family 2.T4"; return false; }
    for (long k = 0; k <= n; ++k) {
      if (!check_hl(hl_closed_form(HlFamilyId::F2_12, n, k).params)) { detail = "fail on family 2.12"; return false; }
      if (!check_hl(hl_closed_form(HlFamilyId::F2_20, n, k).params)) { detail = "fail on family 2.20"; return false; }
      if (!check_hl(hl_closed_form(HlFamilyId::F2_21, n, k).params)) { detail = "fail on family 2.21"; return false; }
    }
    for (long k = 1; k <= n; ++k)
      if (!check_hl(hl_closed_form(HlFamilyId::F2_15, n, k).params)) { detail = "fail on family 2.15"; return false; }
  }

  for (long n = 1; n <= 8; ++n) {
    const ConfluentHeunParams kn{Rational(n), Rational(1), Rational(0), Rational(1, 2),
                                 Rational(2 * n)};
    for (long j = 0; j <= 5; ++j, ++checks)
      if (!check_derivative_relation(DerivativeRelation::Hc_3_5, kn, j, order).equal) {
        detail = "3.5 fails on K_n base";
        return false;
      }
    ++checks;
    if (!check_derivative_relation(DerivativeRelation::Hc_3_4, kn, 1, order).equal) {
      detail = "3.4 fails on K_n base";
      return false;
    }
    // bases with alpha = -n terminate; (alpha)_j != 0 restricts j <= n
    for (const Rational& p : {Rational(1), Rational(2)}) {
      const ConfluentHeunParams hermite{p, Rational(1, 2), Rational(0), Rational(-n),
                                        Rational(-4) * p * Rational(n)};
      const ConfluentHeunParams laguerre{p, Rational(2), Rational(0), Rational(-n),
                                         Rational(-4) * p * Rational(n)};
      for (long j = 0; j <= std::min(5L, n); ++j, checks += 2) {
        if (!check_derivative_relation(DerivativeRelation::Hc_3_5, hermite, j, order).equal) {
          detail = "3.5 fails on the Hermite base";
          return false;
        }
        if (!check_derivative_relation(DerivativeRelation::Hc_3_5, laguerre, j, order).equal) {
          detail = "3.5 fails on the Laguerre base";
          return false;
        }
      }
    }
  }
  detail = std::to_string(checks) + " ladder checks to order 25";
  return true;
}

// 8. The binomial index sum equals the even closed form exactly at 20
// rational points for n <= 15; the negative-binomial sum matches its Laurent
// form within 1e-12 at x in {1/10, 1/2, 1} for n <= 8.
bool entropy_link(std::string& detail) {
  for (long n = 0; n <= 15; ++n) {
    const HlForm f = hl_closed_form(HlFamilyId::F2_2, n);
    for (long i = 1; i <= 20; ++i) {
      const Rational x(i, 21);
      if (!(index_sum_13(n, x) == f.primary.eval_exact(x))) {
        detail = "exact equality fails at n=" + std::to_string(n) + " x=" + x.str();
        return false;
      }
    }
  }
  for (long n = 1; n <= 8; ++n) {
    const HlForm f = hl_closed_form(HlFamilyId::F2_8, n - 1);
    for (const Rational& x : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      const TailSum sum = index_sum_14(n, x, tol10(13));
      const Rational closed = f.primary.eval_exact(-x);
      if (!((sum.value - closed).abs() <= tol10(12))) {
        detail = "truncated sum off at n=" + std::to_string(n) + " x=" + x.str();
        return false;
      }
    }
  }
  detail = "16 x 20 exact points; 8 x 3 truncated points within 1e-12";
  return true;
}

// 9. Hermite and Laguerre reductions hold exactly for n <= 15 (integer
// lambda <= 5), and the four confluent polynomial families certify by ODE
// residual for n <= 10.
bool hermite_laguerre(std::string& detail) {
  for (long n = 0; n <= 15; ++n)
    for (long s = 1; s <= 10; ++s) {
      const Rational x(s, 7);
      if (!(onef1_exact({Rational(-n), Rational(1, 2)}, x) == onef1_hermite_case(n, x))) {
        detail = "Hermite case fails at n=" + std::to_string(n);
        return false;
      }
      for (long lambda = 0; lambda <= 5; ++lambda) {
        const Rational ratio = Rational(factorial(n)) / pochhammer(Rational(lambda + 1), n);
        if (!(onef1_exact({Rational(-n), Rational(lambda + 1)}, x) ==
              ratio * laguerre({n, Rational(lambda)}, x))) {
          detail = "Laguerre link fails at n=" + std::to_string(n);
          return false;
        }
      }
    }
  CertifyOptions options;
  options.max_n = 10;
  long members = 0;
  for (HcFamilyId id : {HcFamilyId::C3_11, HcFamilyId::C3_12, HcFamilyId::C3_14,
                        HcFamilyId::C3_17}) {
    const FamilyReport report = certify_family(id, options);
    members += static_cast<long>(report.members.size());
    if (!report.all_pass()) {
      detail = "family " + report.family + ": " + std::to_string(report.failure_count()) +
               " residual failures";
      return false;
    }
  }
  detail = "reductions n <= 15, lambda <= 5; " + std::to_string(members) +
           " polynomial members residual-certified";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "identity sweep, free parameters <= 30", identity_sweep},
      {2, "ODE residual certification, n <= 15", ode_certification},
      {3, "dual-form equality, n <= 15", dual_forms},
      {4, "series vs closed-form coefficients, order 30", series_agreement},
      {5, "confluent derivative chain and moment identity", confluent_chain},
      {6, "K_n triple agreement within 1e-10", triple_agreement},
      {7, "derivative ladders to order 25", derivative_ladders},
      {8, "entropy-linked index sums", entropy_link},
      {9, "Hermite/Laguerre reductions and confluent residuals", hermite_laguerre},
  };

  int passed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s — %s (%.1f s)\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.title.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (ok) ++passed;
  }
  std::printf("ACCEPTANCE: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
