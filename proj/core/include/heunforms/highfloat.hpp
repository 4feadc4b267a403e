#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "heunforms/rational.hpp"

namespace heunforms {

/// 256-bit floating point value (MPFR-backed). Used only at the numeric
/// boundary: converting certified rational sums for display, quadrature,
/// exp/log. Exact arithmetic never passes through this type.
class HighFloat {
 public:
  static constexpr mpfr_prec_t precision = 256;

  HighFloat() { mpfr_init2(v_, precision); mpfr_set_zero(v_, 1); }
  HighFloat(double d) {  // NOLINT: implicit by design
    mpfr_init2(v_, precision);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  explicit HighFloat(const Rational& q) {
    mpfr_init2(v_, precision);
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
  }
  HighFloat(const HighFloat& o) {
    mpfr_init2(v_, precision);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HighFloat(HighFloat&& o) noexcept {
    mpfr_init2(v_, precision);
    mpfr_swap(v_, o.v_);
  }
  HighFloat& operator=(HighFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HighFloat() { mpfr_clear(v_); }

  static HighFloat pi() {
    HighFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int significant_digits = 20) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant_digits, v_);
    return std::string(buf);
  }

  friend HighFloat operator+(const HighFloat& a, const HighFloat& b) {
    HighFloat r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend HighFloat operator-(const HighFloat& a, const HighFloat& b) {
    HighFloat r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend HighFloat operator*(const HighFloat& a, const HighFloat& b) {
    HighFloat r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend HighFloat operator/(const HighFloat& a, const HighFloat& b) {
    HighFloat r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  HighFloat operator-() const {
    HighFloat r;
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend HighFloat abs(const HighFloat& a) {
    HighFloat r;
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend HighFloat exp(const HighFloat& a) {
    HighFloat r;
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend HighFloat log(const HighFloat& a) {
    if (mpfr_sgn(a.v_) <= 0) throw std::domain_error("HighFloat: log of a nonpositive value");
    HighFloat r;
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend HighFloat cos(const HighFloat& a) {
    HighFloat r;
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const HighFloat& a, const HighFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const HighFloat& a, const HighFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const HighFloat& a, const HighFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const HighFloat& a, const HighFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const HighFloat& a, const HighFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const HighFloat& a, const HighFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

}  // namespace heunforms
