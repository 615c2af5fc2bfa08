// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Exact big-integer / rational kernel.  Everything downstream (bounding
// functions, dimension counts, ledger audits) runs on these primitives, so
// they are deliberately thin wrappers over GMP with checked preconditions.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rdb {

// Natural is a nonnegative arbitrary-precision integer by convention;
// operations below that could leave the nonnegative cone are checked.
using Natural = mpz_class;
using Integer = mpz_class;
using Rational = mpq_class;

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Natural nat(unsigned long v) { return Natural(v); }

inline Natural nat_from_string(const std::string& s) {
  return Natural(s);
}

inline std::string dec(const Integer& v) { return v.get_str(10); }

// Checked subtraction: Natural is closed under it only when a >= b.
inline Natural nat_sub(const Natural& a, const Natural& b) {
  if (a < b) throw DomainError("nat_sub: result would be negative");
  return a - b;
}

// Exact binomial coefficient; binom(n, k) = 0 when k > n.
inline Natural binom(const Natural& n, const Natural& k) {
  if (sgn(n) < 0 || sgn(k) < 0) throw DomainError("binom: negative argument");
  if (k > n) return Natural(0);
  if (!k.fits_ulong_p()) throw DomainError("binom: k does not fit a machine word");
  Natural out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

inline Natural binom(const Natural& n, unsigned long k) { return binom(n, Natural(k)); }

// Exact ceiling of a/b for naturals, b > 0.
inline Natural ceil_div(const Natural& a, const Natural& b) {
  if (sgn(b) <= 0) throw DomainError("ceil_div: division by zero");
  Natural q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Natural factorial(unsigned long a) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), a);
  return out;
}

// Exact a!/b! as a falling product a*(a-1)*...*(b+1); never forms the two
// full factorials.
inline Natural factorial_ratio(const Natural& a, const Natural& b) {
  if (a < b) throw DomainError("factorial_ratio: a < b");
  Natural out(1);
  for (Natural t = b + 1; t <= a; ++t) out *= t;
  return out;
}

inline Natural pow_nat(const Natural& base, unsigned long e) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Number of decimal digits (for size guards on tower-growth recursions).
inline size_t digit_count(const Natural& v) {
  // mpz_sizeinbase may overestimate by one in base 10; render to be exact.
  return v.get_str().size();
}

// Renders an exact rational to `digits` decimal places, rounding half to
// even.  Used for the F(m)/G(m) ratio columns.
inline std::string decimal_string(const Rational& q, int digits) {
  Integer num = q.get_num();
  Integer den = q.get_den();
  bool neg = sgn(num) < 0;
  if (neg) num = -num;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer n = num * scale;
  Integer fl, rem;
  mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  Integer twice = rem * 2;
  if (twice > den || (twice == den && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
  Integer ip = fl / scale;
  Integer fp = fl % scale;
  std::string out = (neg ? "-" : "") + ip.get_str(10);
  if (digits > 0) {
    std::string frac = fp.get_str(10);
    if (frac.size() < static_cast<size_t>(digits))
      frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace rdb
