#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "heunforms/identities.hpp"

using namespace heunforms;

namespace {

// Scale-free case-for-case comparison: "A reduces to B" means the two
// displayed equations are proportional instance by instance, so
// lhs_A * rhs_B == lhs_B * rhs_A.
void check_reduction(const IdentityCase& a, const IdentityCase& b) {
  CHECK(a.pass);
  CHECK(b.pass);
  CHECK(a.lhs * b.rhs == b.lhs * a.rhs);
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& ids = identity_ids();
  CHECK(ids.size() == 26);
  CHECK(is_identity("2.4"));
  CHECK(is_identity("3.99"));
  CHECK(is_identity("5.2-rn"));
  CHECK_FALSE(is_identity("9.99"));
  CHECK(identity_param_names("2.4") == std::vector<std::string>{"n", "m", "i"});
  CHECK(identity_param_names("2.25") == std::vector<std::string>{"n", "h"});
}

TEST_CASE("hand-checked single cases") {
  IdentityCase c = verify_identity("2.7", {1});
  CHECK(c.pass);
  CHECK(c.lhs == Rational(4));
  CHECK(c.rhs == Rational(4));

  c = verify_identity("2.6", {1});
  CHECK(c.lhs == Rational(1, 2));
  CHECK(c.pass);

  c = verify_identity("2.25", {1, 1});
  CHECK(c.lhs == Rational(3, 4));
  CHECK(c.pass);

  c = verify_identity("2.18", {1});
  CHECK(c.lhs == Rational(1, 4));
  CHECK(c.pass);

  c = verify_identity("5.3", {1, 1, 1});
  CHECK(c.lhs == Rational(16));
  CHECK(c.pass);

  c = verify_identity("2.19", {1});
  CHECK(c.lhs == Rational(16));
  CHECK(c.pass);

  // n = 0 collapses 5.2 to its k = 0 term C(2r,r).
  for (long r = 0; r <= 6; ++r)
    for (long m = 0; m <= r; ++m) {
      c = verify_identity("5.2", {0, r, m});
      CHECK(c.pass);
      CHECK(c.lhs == c.rhs);
    }
}

TEST_CASE("inadmissible tuples and unknown ids") {
  CHECK_THROWS_AS(verify_identity("2.4", {2, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("2.16", {3, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("2.4", {2}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(verify_identity("nope", {1}),
                       doctest::Contains("available:"), std::invalid_argument);
}

TEST_CASE("small sweeps match the displayed examples") {
  const IdentityReport r26 = sweep_identity("2.26", {1, 1});
  CHECK(r26.case_count() == 2);
  CHECK(r26.failure_count() == 0);
  CHECK(r26.cases[0].lhs == Rational(1));
  CHECK(r26.cases[1].lhs == Rational(8));

  const IdentityReport r27 = sweep_identity("2.7", {5, 1});
  CHECK(r27.case_count() == 6);
  CHECK(r27.failure_count() == 0);

  const auto reports = sweep(identity_ids(), {5, 2});
  for (const auto& report : reports) CHECK(report.failure_count() == 0);
}

TEST_CASE("every identity passes with free parameters <= 12") {
  for (const auto& id : identity_ids()) {
    const IdentityReport report = sweep_identity(id, {12, 2});
    CHECK_MESSAGE(report.failure_count() == 0, "identity ", id);
    // case count equals the admissible-tuple count
    CHECK(report.case_count() ==
          static_cast<long>(admissible_tuples(id, 12).size()));
  }
}

TEST_CASE("reductions to the classical identities, case for case") {
  for (long n = 0; n <= 30; ++n) {
    check_reduction(verify_identity("2.4", {n, 0, 0}), verify_identity("2.6", {n}));
    check_reduction(verify_identity("2.5", {n, 0, 0}), verify_identity("2.7", {n}));
    check_reduction(verify_identity("2.9", {n, 0, 0}), verify_identity("2.6", {n}));
    check_reduction(verify_identity("2.13", {n, 0, 0}), verify_identity("2.6", {n}));
    check_reduction(verify_identity("2.14", {n, 0, 0}), verify_identity("2.7", {n}));
    check_reduction(verify_identity("2.25", {n, 1}), verify_identity("2.24", {n}));
  }
}

TEST_CASE("index transport between the section-4 and section-2 forms") {
  // (n, r, m) with r = i + m and n replaced by n + r carries 5.2 to 2.4 and
  // 5.3 to 2.5; transported tuples must stay proportional case for case.
  for (long n = 0; n <= 8; ++n)
    for (long r = 0; r <= 8; ++r)
      for (long m = 0; m <= r; ++m) {
        check_reduction(verify_identity("5.2", {n, r, m}),
                        verify_identity("2.4", {n + r, m, r - m}));
        check_reduction(verify_identity("5.3", {n, r, m}),
                        verify_identity("2.5", {n + r, m, r - m}));
      }
  // and back: any 2.4 tuple maps to a 5.2 tuple
  for (long n2 = 0; n2 <= 10; ++n2)
    for (long m = 0; m <= n2; ++m)
      for (long i = 0; i <= n2 - m; ++i) {
        const long r = i + m;
        check_reduction(verify_identity("2.4", {n2, m, i}),
                        verify_identity("5.2", {n2 - r, r, m}));
      }
}

TEST_CASE("particular cases match the general instance") {
  for (long n = 0; n <= 15; ++n) {
    check_reduction(verify_identity("5.2-rmn", {n}), verify_identity("5.2", {n, n, n}));
    check_reduction(verify_identity("5.3-rmn", {n}), verify_identity("5.3", {n, n, n}));
    for (long r = 0; r <= 10; ++r) {
      check_reduction(verify_identity("5.2-rm", {n, r}), verify_identity("5.2", {n, r, r}));
      check_reduction(verify_identity("5.2-m0", {n, r}), verify_identity("5.2", {n, r, 0}));
      if (r >= n)
        check_reduction(verify_identity("5.2-mn", {n, r}), verify_identity("5.2", {n, r, n}));
    }
    for (long m = 0; m <= n; ++m)
      check_reduction(verify_identity("5.2-rn", {n, m}), verify_identity("5.2", {n, n, m}));
  }
}

TEST_CASE("json report records") {
  const IdentityReport report = sweep_identity("2.7", {1, 1});
  std::ostringstream os;
  emit_report_json({report}, os);
  const auto doc = nlohmann::json::parse(os.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["identity"] == "2.7");
  CHECK(doc[0]["params"]["n"] == 0);
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["lhs"] == doc[0]["rhs"]);
  CHECK(doc[1]["lhs"] == "4");
}

TEST_CASE("empty report set is a valid document") {
  std::ostringstream json, csv;
  emit_report_json({}, json);
  CHECK(nlohmann::json::parse(json.str()).empty());
  emit_report_csv({}, csv);
  CHECK(csv.str() == "identity,params,lhs,rhs,pass\n");
}

TEST_CASE("a perturbed case serializes as a failure") {
  // Harness self-test: build a deliberately broken record.
  IdentityCase broken = verify_identity("2.6", {3});
  broken.rhs += Rational(1, 7);
  broken.pass = broken.lhs == broken.rhs;
  CHECK_FALSE(broken.pass);
  IdentityReport report;
  report.identity = "2.6";
  report.range = "synthetic";
  report.cases = {broken};
  CHECK(report.failure_count() == 1);
  CHECK(report.failures().size() == 1);

  std::ostringstream json, csv;
  emit_report_json({report}, json);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc[0]["pass"] == false);
  CHECK(doc[0]["lhs"] != doc[0]["rhs"]);
  emit_report_csv({report}, csv);
  CHECK(csv.str().find("false") != std::string::npos);
  CHECK(csv.str().find("n=3") != std::string::npos);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  const IdentityReport one = sweep_identity("2.4", {9, 1});
  const IdentityReport four = sweep_identity("2.4", {9, 4});
  std::ostringstream a, b;
  emit_report_json({one}, a);
  emit_report_json({four}, b);
  CHECK(a.str() == b.str());
}
