#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "heunforms/rational.hpp"

namespace heunforms {

/// One evaluated identity instance. Both sides are computed by structurally
/// different code paths (the displayed sum vs the displayed closed form) and
/// compared exactly; pass <=> lhs == rhs.
struct IdentityCase {
  std::string identity;
  std::vector<std::pair<std::string, long>> params;
  Rational lhs;
  Rational rhs;
  bool pass = false;

  std::string params_str(char sep = ' ') const;
};

/// Aggregated result of sweeping one identity over its admissible tuples.
struct IdentityReport {
  std::string identity;
  std::string range;  // e.g. "maxN=30"
  std::vector<IdentityCase> cases;  // deterministic lexicographic tuple order
  double wall_seconds = 0.0;

  long case_count() const { return static_cast<long>(cases.size()); }
  std::vector<IdentityCase> failures() const;
  long failure_count() const;
};

/// Catalog identifiers, in paper order: "2.4", "2.5", "2.6", "2.7", "2.9",
/// "2.10", "2.13", "2.14", "2.16", "2.17", "2.18", "2.19", "2.22", "2.23",
/// "2.24", "2.25", "2.26", "3.99", "5.2" with its particular cases
/// ("5.2-rmn", "5.2-rm", "5.2-m0", "5.2-rn", "5.2-mn"), "5.3", "5.3-rmn".
const std::vector<std::string>& identity_ids();
bool is_identity(const std::string& id);
/// Parameter names of an identity, in reporting order.
std::vector<std::string> identity_param_names(const std::string& id);

/// Evaluates a single tuple. Throws std::invalid_argument for an unknown id
/// or an inadmissible tuple.
IdentityCase verify_identity(const std::string& id, const std::vector<long>& params);

/// All admissible tuples with every free parameter <= max_n, in lexicographic
/// order.
std::vector<std::vector<long>> admissible_tuples(const std::string& id, long max_n);

struct SweepOptions {
  long max_n = 30;
  long threads = 0;  // 0 = hardware concurrency
};

/// Sweeps identities over their admissible ranges. Workers run in parallel
/// but reports and cases come back in deterministic order; a failing case is
/// recorded, never thrown.
IdentityReport sweep_identity(const std::string& id, const SweepOptions& options);
std::vector<IdentityReport> sweep(const std::vector<std::string>& ids, const SweepOptions& options);

/// Serializes case records. JSON: array of {"identity","params","lhs","rhs",
/// "pass"} objects; CSV: the same columns, params as "n=1;m=0". Rationals are
/// exact "p/q" strings. Output is byte-identical across runs.
void emit_report_json(const std::vector<IdentityReport>& reports, std::ostream& os);
void emit_report_csv(const std::vector<IdentityReport>& reports, std::ostream& os);

}  // namespace heunforms
