// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// HighPrecisionReal: an outward-rounded MPFR interval.  Comparisons that the
// interval cannot decide throw instead of guessing, so every analytic
// inequality verified with this type is rigorous at the chosen precision.
#pragma once

#include <mpfr.h>

#include <string>

#include "rdb/exact.hpp"

namespace rdb {

struct UndecidableComparison : std::runtime_error {
  UndecidableComparison()
      : std::runtime_error(
            "HighPrecisionReal: comparison undecidable at current precision") {}
};

class HPReal {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 256;

  explicit HPReal(mpfr_prec_t prec = kDefaultPrec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  HPReal(const HPReal& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~HPReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static HPReal exact(const Integer& v, mpfr_prec_t prec = kDefaultPrec) {
    HPReal r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
  }
  static HPReal exact(const Rational& v, mpfr_prec_t prec = kDefaultPrec) {
    HPReal r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
  }
  static HPReal exact(long v, mpfr_prec_t prec = kDefaultPrec) {
    HPReal r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  // Natural logarithm of a positive exact integer/rational.
  static HPReal log_of(const Integer& v, mpfr_prec_t prec = kDefaultPrec) {
    if (sgn(v) <= 0) throw DomainError("HPReal::log_of: nonpositive argument");
    HPReal x = exact(v, prec), r(prec);
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }
  static HPReal log_of(const Rational& v, mpfr_prec_t prec = kDefaultPrec) {
    if (sgn(v) <= 0) throw DomainError("HPReal::log_of: nonpositive argument");
    HPReal x = exact(v, prec), r(prec);
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }

  // log(2*pi), used by both Stirling bounds.
  static HPReal log_two_pi(mpfr_prec_t prec = kDefaultPrec) {
    HPReal r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_mul_ui(r.lo_, r.lo_, 2, MPFR_RNDD);
    mpfr_log(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    mpfr_mul_ui(r.hi_, r.hi_, 2, MPFR_RNDU);
    mpfr_log(r.hi_, r.hi_, MPFR_RNDU);
    return r;
  }

  HPReal operator-() const {
    HPReal r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
  }
  HPReal operator+(const HPReal& o) const {
    HPReal r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  HPReal operator-(const HPReal& o) const { return *this + (-o); }
  HPReal operator*(const HPReal& o) const {
    // Full interval product: extremes over the four endpoint products.
    HPReal r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    bool first = true;
    const mpfr_srcptr as[2] = {lo_, hi_};
    const mpfr_srcptr bs[2] = {o.lo_, o.hi_};
    for (auto a : as)
      for (auto b : bs) {
        mpfr_mul(t, a, b, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a, b, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  HPReal operator*(const Integer& n) const { return *this * exact(n, prec_); }
  HPReal operator*(const Rational& q) const { return *this * exact(q, prec_); }
  HPReal operator+(const Rational& q) const { return *this + exact(q, prec_); }
  HPReal operator-(const Rational& q) const { return *this - exact(q, prec_); }

  // Interval hull: smallest interval containing both arguments.
  static HPReal hull(const HPReal& a, const HPReal& b) {
    HPReal r(a.prec_);
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  // Rigorous interval for log(e^a + e^b); log-add-exp is monotone in both
  // arguments, so endpoint evaluation with directed rounding is sound.
  static HPReal log_add(const HPReal& a, const HPReal& b) {
    HPReal r(a.prec_);
    mpfr_t big, small, t;
    mpfr_init2(big, a.prec_);
    mpfr_init2(small, a.prec_);
    mpfr_init2(t, a.prec_);

    mpfr_max(big, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(small, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_sub(t, small, big, MPFR_RNDD);
    mpfr_exp(t, t, MPFR_RNDD);
    mpfr_log1p(t, t, MPFR_RNDD);
    mpfr_add(r.lo_, big, t, MPFR_RNDD);

    mpfr_max(big, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_min(small, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_sub(t, small, big, MPFR_RNDU);
    mpfr_exp(t, t, MPFR_RNDU);
    mpfr_log1p(t, t, MPFR_RNDU);
    mpfr_add(r.hi_, big, t, MPFR_RNDU);

    mpfr_clear(big);
    mpfr_clear(small);
    mpfr_clear(t);
    return r;
  }

  // Decidable order predicates.  le/lt succeed only when the intervals are
  // separated appropriately; otherwise they throw.
  bool le(const HPReal& o) const {
    if (mpfr_cmp(hi_, o.lo_) <= 0) return true;
    if (mpfr_cmp(lo_, o.hi_) > 0) return false;
    throw UndecidableComparison();
  }
  bool lt(const HPReal& o) const {
    if (mpfr_cmp(hi_, o.lo_) < 0) return true;
    if (mpfr_cmp(lo_, o.hi_) >= 0) return false;
    throw UndecidableComparison();
  }
  bool le(const Rational& q) const { return le(exact(q, prec_)); }
  bool lt(const Rational& q) const { return lt(exact(q, prec_)); }

  double value() const {  // midpoint, for display only
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double v = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return v;
  }
  double error_radius() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_sub(m, hi_, lo_, MPFR_RNDU);
    mpfr_div_ui(m, m, 2, MPFR_RNDU);
    double v = mpfr_get_d(m, MPFR_RNDU);
    mpfr_clear(m);
    return v;
  }
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  // exp of the midpoint, display only (used to print Omega from log-domain).
  double exp_value() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    mpfr_exp(m, m, MPFR_RNDN);
    double v = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return v;
  }

  mpfr_prec_t precision() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace rdb
