#include "heunforms/identities.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "heunforms/combinatorics.hpp"
#include "heunforms/detail/parallel.hpp"

namespace heunforms {

namespace {

using Tuple = std::vector<long>;

Rational C(long n, long k) { return Rational(binomial(n, k)); }

Rational inv_C(long n, long k) { return Rational(1) / C(n, k); }

Rational neg_quarter_pow(long k) { return Rational(-1, 4).pow(k); }

Rational half_offset(long m) { return Rational(2 * m + 1, 2); }  // m + 1/2

// Pochhammer ratios inside identity sums are always computed directly; the
// 4^{-j}-binomial conversion of these ratios is itself one of the facts under
// test and must not leak into the evaluation path.
Rational pr(const Rational& a, const Rational& b, long j) {
  return pochhammer(a, j) / pochhammer(b, j);
}

struct IdentityDef {
  std::string id;
  std::vector<std::string> param_names;
  std::function<bool(const Tuple&)> admissible;
  std::function<Rational(const Tuple&)> lhs;
  std::function<Rational(const Tuple&)> rhs;
  std::function<std::vector<Tuple>(long)> enumerate;
};

std::vector<Tuple> enum_n(long N) {
  std::vector<Tuple> out;
  for (long n = 0; n <= N; ++n) out.push_back({n});
  return out;
}

// (n, a, b) with 0 <= a <= n, lo <= b <= n - a; `a_min` bounds the middle
// index from below (k >= 1 families).
std::vector<Tuple> enum_nested(long N, long a_min, long b_lo) {
  std::vector<Tuple> out;
  for (long n = 0; n <= N; ++n)
    for (long a = a_min; a <= n; ++a)
      for (long b = b_lo; b <= n - a; ++b) out.push_back({n, a, b});
  return out;
}

// (n, m, i) with independent m in [0, N], 0 <= i <= n.
std::vector<Tuple> enum_free_m(long N) {
  std::vector<Tuple> out;
  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= N; ++m)
      for (long i = 0; i <= n; ++i) out.push_back({n, m, i});
  return out;
}

// (n, r, m) with n in [0, N], r in [0, N], 0 <= m <= r.
std::vector<Tuple> enum_nrm(long N) {
  std::vector<Tuple> out;
  for (long n = 0; n <= N; ++n)
    for (long r = 0; r <= N; ++r)
      for (long m = 0; m <= r; ++m) out.push_back({n, r, m});
  return out;
}

std::vector<Tuple> enum_pairs(long N, bool second_at_least_first) {
  std::vector<Tuple> out;
  for (long n = 0; n <= N; ++n)
    for (long b = second_at_least_first ? n : 0; b <= N; ++b) out.push_back({n, b});
  return out;
}

const std::vector<IdentityDef>& defs() {
  static const std::vector<IdentityDef> table = [] {
    std::vector<IdentityDef> d;

    d.push_back({"2.4",
                 {"n", "m", "i"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], i = t[2];
                   Rational s(0);
                   for (long j = i; j <= n - m; ++j) {
                     const Rational sign((j - i) % 2 == 0 ? 1 : -1);
                     s += sign * C(n - m, j) * pr(half_offset(m), Rational(m + 1), j) * C(j, i);
                   }
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], i = t[2];
                   return Rational(4).pow(m) * inv_C(n, m) * inv_C(2 * m, m) * C(m + i, m) *
                          coeff_a(n, m + i);
                 },
                 [](long N) { return enum_nested(N, 0, 0); }});

    d.push_back({"2.5",
                 {"n", "m", "j"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], j = t[2];
                   Rational s(0);
                   for (long i = j; i <= n - m; ++i)
                     s += C(m + i, m) * C(i, j) * coeff_a(n, m + i);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], j = t[2];
                   return Rational(4).pow(-m) * C(n, m) * C(2 * m, m) *
                          pr(half_offset(m), Rational(m + 1), j) * C(n - m, j);
                 },
                 [](long N) { return enum_nested(N, 0, 0); }});

    d.push_back({"2.6",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long j = 0; j <= t[0]; ++j)
                     s += neg_quarter_pow(j) * C(t[0], j) * C(2 * j, j);
                   return s;
                 },
                 [](const Tuple& t) { return Rational(4).pow(-t[0]) * C(2 * t[0], t[0]); },
                 enum_n});

    d.push_back({"2.7",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long i = 0; i <= t[0]; ++i)
                     s += C(2 * i, i) * C(2 * t[0] - 2 * i, t[0] - i);
                   return s;
                 },
                 [](const Tuple& t) { return Rational(4).pow(t[0]); },
                 enum_n});

    d.push_back({"2.9",
                 {"n", "m", "i"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && t[1] >= 0 && 0 <= t[2] && t[2] <= t[0];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], i = t[2];
                   Rational s(0);
                   for (long j = i; j <= n; ++j) {
                     const Rational sign((j - i) % 2 == 0 ? 1 : -1);
                     s += sign * C(n, j) * pr(Rational(1, 2), Rational(m + 1), j) * C(j, i);
                   }
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], i = t[2];
                   return C(2 * n + 2 * m - 2 * i, 2 * m) * inv_C(n + m, n) *
                          inv_C(n + m - i, m) * coeff_a(n, i);
                 },
                 enum_free_m});

    d.push_back({"2.10",
                 {"n", "m", "j"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && t[1] >= 0 && 0 <= t[2] && t[2] <= t[0];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], j = t[2];
                   Rational s(0);
                   for (long i = j; i <= n; ++i)
                     s += C(2 * n + 2 * m - 2 * i, 2 * m) * inv_C(n + m - i, m) * C(i, j) *
                          coeff_a(n, i);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1], j = t[2];
                   return C(n + m, n) * C(n, j) * pr(Rational(1, 2), Rational(m + 1), j);
                 },
                 enum_free_m});

    d.push_back({"2.13",
                 {"n", "k", "i"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], i = t[2];
                   Rational s(0);
                   for (long j = i; j <= n - k; ++j) {
                     const Rational sign((j - i) % 2 == 0 ? 1 : -1);
                     s += sign * C(n - k, j) * pr(half_offset(k), Rational(2 * k + 1), j) * C(j, i);
                   }
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], i = t[2];
                   return Rational(4).pow(k) * inv_C(n + k, n) * inv_C(n, k) *
                          C(2 * n - 2 * i, 2 * k) * C(n, i) * coeff_r(n, k + i);
                 },
                 [](long N) { return enum_nested(N, 0, 0); }});

    d.push_back({"2.14",
                 {"n", "k", "j"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], j = t[2];
                   Rational s(0);
                   for (long i = j; i <= n - k; ++i)
                     s += C(2 * n - 2 * i, 2 * k) * C(n, i) * C(i, j) * coeff_r(n, k + i);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], j = t[2];
                   return Rational(4).pow(-k) * C(n + k, n) * C(n, k) * C(n - k, j) *
                          pr(half_offset(k), Rational(2 * k + 1), j);
                 },
                 [](long N) { return enum_nested(N, 0, 0); }});

    d.push_back({"2.16",
                 {"n", "k", "i"},
                 [](const Tuple& t) {
                   return t[0] >= 1 && 1 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], i = t[2];
                   Rational s(0);
                   for (long j = i; j <= n - k; ++j) {
                     const Rational sign((j - i) % 2 == 0 ? 1 : -1);
                     s += sign * C(n - k, j) * pr(half_offset(k), Rational(2 * k), j) * C(j, i);
                   }
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], i = t[2];
                   return Rational(2).pow(2 * k - 1) * inv_C(n + k - 1, k - 1) *
                          inv_C(n - 1, k - 1) * C(2 * n - 2 * i - 2, 2 * k - 2) * C(n - 1, i) *
                          coeff_r(n, k + i);
                 },
                 [](long N) { return enum_nested(N, 1, 0); }});

    d.push_back({"2.17",
                 {"n", "k", "j"},
                 [](const Tuple& t) {
                   return t[0] >= 1 && 1 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], j = t[2];
                   Rational s(0);
                   for (long i = j; i <= n - k; ++i)
                     s += C(2 * n - 2 * i - 2, 2 * k - 2) * C(n - 1, i) * C(i, j) *
                          coeff_r(n, k + i);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], j = t[2];
                   return Rational(2).pow(1 - 2 * k) * C(n + k - 1, k - 1) * C(n - 1, k - 1) *
                          C(n - k, j) * pr(half_offset(k), Rational(2 * k), j);
                 },
                 [](long N) { return enum_nested(N, 1, 0); }});

    d.push_back({"2.18",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long j = 0; j <= t[0]; ++j)
                     s += neg_quarter_pow(j) * C(t[0], j) * C(2 * j + 1, j);
                   return s;
                 },
                 [](const Tuple& t) {
                   return Rational(1, t[0] + 1) * Rational(4).pow(-t[0]) * C(2 * t[0], t[0]);
                 },
                 enum_n});

    d.push_back({"2.19",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long i = 0; i <= t[0]; ++i)
                     s += Rational(i + 1) * C(2 * i + 2, i + 1) * C(2 * t[0] - 2 * i, t[0] - i);
                   return s;
                 },
                 [](const Tuple& t) {
                   return Rational(t[0] + 1, 2) * Rational(4).pow(t[0] + 1);
                 },
                 enum_n});

    d.push_back({"2.22",
                 {"n", "k", "i"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], i = t[2];
                   Rational s(0);
                   for (long j = i; j <= n - k; ++j) {
                     const Rational sign((j - i) % 2 == 0 ? 1 : -1);
                     s += sign * C(n - k, j) * pr(half_offset(k), Rational(2 * k + 2), j) * C(j, i);
                   }
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], i = t[2];
                   return Rational(4).pow(k) * Rational(2 * k + 1, n + 1) * inv_C(n + k + 1, n) *
                          inv_C(n, k) * C(2 * n - 2 * i + 2, 2 * k + 2) * C(n + 1, i) *
                          coeff_r(n, k + i);
                 },
                 [](long N) { return enum_nested(N, 0, 0); }});

    d.push_back({"2.23",
                 {"n", "k", "j"},
                 [](const Tuple& t) {
                   return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0] && 0 <= t[2] &&
                          t[2] <= t[0] - t[1];
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], j = t[2];
                   Rational s(0);
                   for (long i = j; i <= n - k; ++i)
                     s += C(2 * n - 2 * i + 2, 2 * k + 2) * C(n + 1, i) * C(i, j) *
                          coeff_r(n, k + i);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], k = t[1], j = t[2];
                   return Rational(4).pow(-k) * Rational(n + 1, 2 * k + 1) * C(n + k + 1, n) *
                          C(n, k) * C(n - k, j) * pr(half_offset(k), Rational(2 * k + 2), j);
                 },
                 [](long N) { return enum_nested(N, 0, 0); }});

    d.push_back({"2.24",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long j = 0; j <= t[0]; ++j)
                     s += neg_quarter_pow(j) * C(t[0] + 1, j + 1) * C(2 * j, j);
                   return s;
                 },
                 [](const Tuple& t) {
                   return Rational(2 * t[0] + 1) * Rational(4).pow(-t[0]) * C(2 * t[0], t[0]);
                 },
                 enum_n});

    d.push_back({"2.25",
                 {"n", "h"},
                 [](const Tuple& t) { return t[0] >= 0 && t[1] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0], h = t[1];
                   Rational s(0);
                   for (long j = 0; j <= n; ++j)
                     s += neg_quarter_pow(j) * C(n, j) * C(2 * j, j) * inv_C(j + h, h);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], h = t[1];
                   return Rational(4).pow(-n) * C(2 * n + 2 * h, n + h) * inv_C(2 * h, h);
                 },
                 [](long N) { return enum_pairs(N, false); }});

    d.push_back({"2.26",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long i = 0; i <= t[0]; ++i)
                     s += Rational(2 * t[0] - 2 * i + 1) * C(2 * i, i) *
                          C(2 * t[0] - 2 * i, t[0] - i);
                   return s;
                 },
                 [](const Tuple& t) { return Rational(t[0] + 1) * Rational(4).pow(t[0]); },
                 enum_n});

    d.push_back({"3.99",
                 {"j"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   Rational s(0);
                   for (long i = 0; 2 * i <= t[0]; ++i)
                     s += C(t[0], 2 * i) * C(2 * i, i) * Rational(4).pow(-i);
                   return s;
                 },
                 [](const Tuple& t) { return Rational(2).pow(-t[0]) * C(2 * t[0], t[0]); },
                 enum_n});

    d.push_back({"5.2",
                 {"n", "r", "m"},
                 [](const Tuple& t) { return t[0] >= 0 && t[1] >= t[2] && t[2] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1], m = t[2];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += neg_quarter_pow(k) * C(n + r - m, n - k) * C(2 * r + 2 * k, r + k) *
                          C(r - m + k, k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1], m = t[2];
                   return Rational(4).pow(-n) * inv_C(n + r, m) * C(r, m) * C(2 * r, r) *
                          C(2 * n, n);
                 },
                 enum_nrm});

    d.push_back({"5.2-rmn",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += neg_quarter_pow(k) * C(n, k) * C(2 * n + 2 * k, n + k);
                   return s;
                 },
                 [](const Tuple& t) { return Rational(4).pow(-t[0]) * C(2 * t[0], t[0]); },
                 enum_n});

    d.push_back({"5.2-rm",
                 {"n", "r"},
                 [](const Tuple& t) { return t[0] >= 0 && t[1] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += neg_quarter_pow(k) * C(n, k) * C(2 * r + 2 * k, r + k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1];
                   return Rational(4).pow(-n) * inv_C(n + r, r) * C(2 * r, r) * C(2 * n, n);
                 },
                 [](long N) { return enum_pairs(N, false); }});

    d.push_back({"5.2-m0",
                 {"n", "r"},
                 [](const Tuple& t) { return t[0] >= 0 && t[1] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += neg_quarter_pow(k) * C(n + r, n - k) * C(2 * r + 2 * k, r + k) *
                          C(r + k, k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1];
                   return Rational(4).pow(-n) * C(2 * r, r) * C(2 * n, n);
                 },
                 [](long N) { return enum_pairs(N, false); }});

    d.push_back({"5.2-rn",
                 {"n", "m"},
                 [](const Tuple& t) { return t[0] >= 0 && 0 <= t[1] && t[1] <= t[0]; },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += neg_quarter_pow(k) * C(2 * n - m, n - k) * C(2 * n + 2 * k, n + k) *
                          C(n - m + k, k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], m = t[1];
                   return Rational(4).pow(-n) * inv_C(2 * n, m) * C(n, m) * C(2 * n, n) *
                          C(2 * n, n);
                 },
                 [](long N) {
                   std::vector<Tuple> out;
                   for (long n = 0; n <= N; ++n)
                     for (long m = 0; m <= n; ++m) out.push_back({n, m});
                   return out;
                 }});

    d.push_back({"5.2-mn",
                 {"n", "r"},
                 [](const Tuple& t) { return t[0] >= 0 && t[1] >= t[0]; },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += neg_quarter_pow(k) * C(r, n - k) * C(2 * r + 2 * k, r + k) *
                          C(r - n + k, k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1];
                   return Rational(4).pow(-n) * inv_C(n + r, r) * C(r, n) * C(2 * r, r) *
                          C(2 * n, n);
                 },
                 [](long N) { return enum_pairs(N, true); }});

    d.push_back({"5.3",
                 {"n", "r", "m"},
                 [](const Tuple& t) { return t[0] >= 0 && t[1] >= t[2] && t[2] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1], m = t[2];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += C(r + k, m) * C(r + k - m, k) * C(2 * r + 2 * k, r + k) *
                          C(2 * n - 2 * k, n - k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const long n = t[0], r = t[1], m = t[2];
                   return Rational(4).pow(n) * C(n + r, m) * C(2 * r, r) * C(n + r - m, n);
                 },
                 enum_nrm});

    d.push_back({"5.3-rmn",
                 {"n"},
                 [](const Tuple& t) { return t[0] >= 0; },
                 [](const Tuple& t) {
                   const long n = t[0];
                   Rational s(0);
                   for (long k = 0; k <= n; ++k)
                     s += C(n + k, n) * C(2 * n + 2 * k, n + k) * C(2 * n - 2 * k, n - k);
                   return s;
                 },
                 [](const Tuple& t) {
                   const Rational c = C(2 * t[0], t[0]);
                   return Rational(4).pow(t[0]) * c * c;
                 },
                 enum_n});

    return d;
  }();
  return table;
}

const IdentityDef& find_def(const std::string& id) {
  for (const auto& def : defs())
    if (def.id == id) return def;
  std::ostringstream os;
  os << "unknown identity \"" << id << "\"; available:";
  for (const auto& def : defs()) os << " " << def.id;
  throw std::invalid_argument(os.str());
}

IdentityCase evaluate(const IdentityDef& def, const Tuple& tuple) {
  IdentityCase c;
  c.identity = def.id;
  for (std::size_t i = 0; i < def.param_names.size(); ++i)
    c.params.emplace_back(def.param_names[i], tuple[i]);
  c.lhs = def.lhs(tuple);
  c.rhs = def.rhs(tuple);
  c.pass = c.lhs == c.rhs;
  return c;
}

}  // namespace

std::string IdentityCase::params_str(char sep) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << sep;
    os << params[i].first << "=" << params[i].second;
  }
  return os.str();
}

std::vector<IdentityCase> IdentityReport::failures() const {
  std::vector<IdentityCase> out;
  for (const auto& c : cases)
    if (!c.pass) out.push_back(c);
  return out;
}

long IdentityReport::failure_count() const {
  long n = 0;
  for (const auto& c : cases)
    if (!c.pass) ++n;
  return n;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& def : defs()) v.push_back(def.id);
    return v;
  }();
  return ids;
}

bool is_identity(const std::string& id) {
  for (const auto& def : defs())
    if (def.id == id) return true;
  return false;
}

std::vector<std::string> identity_param_names(const std::string& id) {
  return find_def(id).param_names;
}

IdentityCase verify_identity(const std::string& id, const std::vector<long>& params) {
  const IdentityDef& def = find_def(id);
  if (params.size() != def.param_names.size())
    throw std::invalid_argument("identity " + id + " takes " +
                                std::to_string(def.param_names.size()) + " parameter(s)");
  if (!def.admissible(params))
    throw std::invalid_argument("inadmissible parameters for identity " + id);
  return evaluate(def, params);
}

std::vector<std::vector<long>> admissible_tuples(const std::string& id, long max_n) {
  if (max_n < 0) throw std::invalid_argument("admissible_tuples: max_n must be nonnegative");
  return find_def(id).enumerate(max_n);
}

IdentityReport sweep_identity(const std::string& id, const SweepOptions& options) {
  const IdentityDef& def = find_def(id);
  const std::vector<Tuple> tuples = def.enumerate(options.max_n);
  IdentityReport report;
  report.identity = id;
  report.range = "maxN=" + std::to_string(options.max_n);
  report.cases.resize(tuples.size());
  const auto start = std::chrono::steady_clock::now();
  detail::parallel_for(tuples.size(), options.threads,
                       [&](std::size_t i) { report.cases[i] = evaluate(def, tuples[i]); });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<IdentityReport> sweep(const std::vector<std::string>& ids,
                                  const SweepOptions& options) {
  std::vector<IdentityReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) reports.push_back(sweep_identity(id, options));
  return reports;
}

void emit_report_json(const std::vector<IdentityReport>& reports, std::ostream& os) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& report : reports) {
    for (const auto& c : report.cases) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [name, value] : c.params) params[name] = value;
      arr.push_back({{"identity", c.identity},
                     {"params", params},
                     {"lhs", c.lhs.str()},
                     {"rhs", c.rhs.str()},
                     {"pass", c.pass}});
    }
  }
  os << arr.dump() << "\n";
}

void emit_report_csv(const std::vector<IdentityReport>& reports, std::ostream& os) {
  os << "identity,params,lhs,rhs,pass\n";
  for (const auto& report : reports)
    for (const auto& c : report.cases)
      os << c.identity << "," << c.params_str(';') << "," << c.lhs.str() << "," << c.rhs.str()
         << "," << (c.pass ? "true" : "false") << "\n";
}

}  // namespace heunforms
