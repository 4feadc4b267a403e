#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heunforms/closed_form.hpp"
#include "heunforms/heun_ode.hpp"
#include "heunforms/polynomial.hpp"
#include "heunforms/rational.hpp"

namespace heunforms {

/// General-Heun closed-form families. Each id fixes the HeunParams
/// constructor and one or two t-Laurent forms.
enum class HlFamilyId {
  F2_2,   // sum a_{nj} t^{2j}
  F2_3,   // (m,m+1)-ladder family, 0 <= m <= n; two displayed forms
  F2_8,   // sum a_{nj} t^{2j-2n-1}
  F2_T4,  // Laurent family, m >= 0; two forms
  F2_12,  // (2k+1,2k+1) family, 0 <= k <= n; two forms
  F2_15,  // (2k,2k) family, 1 <= k <= n; two forms
  F2_20,  // Laurent (2k+1,2k+1) family; two forms
  F2_21,  // (2k+2,2k+2) family, encoded exactly as displayed; two forms
};

/// Confluent closed-form families.
enum class HcFamilyId {
  C3_3,   // HC(p,gamma,0,alpha,4p*alpha) = 1F1(alpha;gamma;-4px)
  C3_7,   // K_n
  C3_9,   // scaled j-th derivative of K_n
  C3_11,  // half-integer gamma polynomial family
  C3_12,  // Laguerre-parameter polynomial family
  C3_14,  // gamma = 1/2 polynomial family
  C3_17,  // Laguerre reduction
};

std::string family_name(HlFamilyId id);  // "2.2", "2.T4", ...
std::string family_name(HcFamilyId id);  // "3.3", ...
std::optional<HlFamilyId> parse_hl_family(const std::string& name);
std::optional<HcFamilyId> parse_hc_family(const std::string& name);
const std::vector<HlFamilyId>& all_hl_families();
const std::vector<HcFamilyId>& all_hc_families();

/// Whether a family takes a second index, and its conventional letter.
bool hl_family_has_aux(HlFamilyId id);
char hl_family_aux_name(HlFamilyId id);  // 'm' or 'k'

/// Raised when the two displayed forms of a family disagree; carries both
/// t-expressions so the mismatch is inspectable.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(std::string message, std::string primary, std::string alternate);
  const std::string& primary_form() const { return primary_; }
  const std::string& alternate_form() const { return alternate_; }

 private:
  std::string primary_, alternate_;
};

struct HlForm {
  HeunParams params;
  ClosedFormExpr primary;
  std::optional<ClosedFormExpr> alternate;
};

/// Builds the closed form(s) of a family member. When two displayed forms
/// exist they are compared term-by-term in t before returning; a mismatch
/// raises CertificationError.
HlForm hl_closed_form(HlFamilyId id, long n, long aux = 0);

struct HcFamilyArgs {
  Rational p;        // required where the family has a free p (C3_3, C3_11..C3_17)
  long n = 0;        // K_n index or polynomial-family n
  long j = 0;        // derivative / shift index (C3_9, C3_11, C3_12)
  Rational lambda;   // C3_12 / C3_17, > -1
  Rational alpha;    // C3_3 only
  Rational gamma;    // C3_3 only
};

struct HcForm {
  ConfluentHeunParams params;
  /// Exact polynomial form in x (families 3.11, 3.12, 3.14, 3.17).
  std::optional<Polynomial> polynomial;
  /// Exact-or-certified evaluator. Polynomial families evaluate exactly and
  /// ignore tol; 1F1-backed families return a truncated value within tol.
  std::function<Rational(const Rational& x, const Rational& tol)> evaluate;
};

HcForm hc_closed_form(HcFamilyId id, const HcFamilyArgs& args);

/// Exact binomial index sum of Eq-type (1.3): sum_k (C(n,k) x^k (1-x)^{n-k})^2.
Rational index_sum_13(long n, const Rational& x);

struct TailSum {
  Rational value;
  Rational tail_bound;  // certified: |true sum - value| <= tail_bound <= tol
  long terms;
};

/// Truncated negative-binomial index sum sum_k (C(n+k-1,k) x^k (1+x)^{-n-k})^2
/// for x > 0. Truncation stops once the geometric bound term/(1-rho) drops
/// below tol, with rho the current-term ratio ((n+K)/(K+1))^2 (x/(1+x))^2.
TailSum index_sum_14(long n, const Rational& x, const Rational& tol, long max_terms = 1000000);

struct MemberResult {
  std::string member;  // e.g. "n=3 m=1"
  bool residual_zero = false;
  bool forms_match = false;
  std::string note;  // leading residual term or mismatch details
  bool pass() const { return residual_zero && forms_match; }
};

struct FamilyReport {
  std::string family;
  std::vector<MemberResult> members;
  double wall_seconds = 0.0;
  long failure_count() const;
  bool all_pass() const { return failure_count() == 0; }
};

struct CertifyOptions {
  long max_n = 10;
  std::vector<Rational> p_values = {Rational(1), Rational(2), Rational(3)};
  std::vector<long> lambdas = {0, 1, 2, 3, 4, 5};
  long threads = 0;  // 0 = hardware concurrency
};

/// Certifies every member of a family in the given range: ODE residual
/// identically zero and (where present) displayed forms equal. Failures are
/// collected as data, never thrown.
FamilyReport certify_family(HlFamilyId id, const CertifyOptions& options);
FamilyReport certify_family(HcFamilyId id, const CertifyOptions& options);

}  // namespace heunforms
