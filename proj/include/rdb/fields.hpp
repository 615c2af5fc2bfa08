// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Coefficient-field abstraction: exact rationals for certified identity
// checks, complex doubles for numeric plane finding.  All tolerance logic
// funnels through here so the scale-aware zero test lives in one place.
#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "rdb/exact.hpp"

namespace rdb {

using Complex = std::complex<double>;

// Default tolerance for residuals of polynomial evaluation over Complex:
// a value v counts as zero at point x iff
//   |v| <= tol * (1 + |f|_1 * |x|_inf^deg f),
// where |f|_1 is the 1-norm of the coefficient vector.  This keeps the
// test invariant under rescaling of f and roughly invariant under
// rescaling of x.
inline constexpr double kZeroTol = 1e-9;

template <typename K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& v, double /*scale*/ = 0.0,
                      double /*tol*/ = 0.0) {
    return sgn(v) == 0;
  }
  static double abs_approx(const Rational& v) { return std::fabs(v.get_d()); }
  static Rational from_natural(const Natural& n) { return Rational(n); }
  static Rational from_long(long n) { return Rational(n); }
  static Rational inv_long(long n) {
    if (n == 0) throw DomainError("division by zero");
    Rational r(1, n);
    r.canonicalize();
    return r;
  }
  static std::string render(const Rational& v) { return v.get_str(); }
};

template <>
struct FieldTraits<Complex> {
  static constexpr bool exact = false;
  // scale is the precomputed |f|_1 * |x|_inf^d factor; callers pass 0 for
  // a plain absolute test.
  static bool is_zero(const Complex& v, double scale = 0.0,
                      double tol = kZeroTol) {
    return std::abs(v) <= tol * (1.0 + scale);
  }
  static double abs_approx(const Complex& v) { return std::abs(v); }
  static Complex from_natural(const Natural& n) { return {n.get_d(), 0.0}; }
  static Complex from_long(long n) { return {static_cast<double>(n), 0.0}; }
  static Complex inv_long(long n) {
    if (n == 0) throw DomainError("division by zero");
    return {1.0 / static_cast<double>(n), 0.0};
  }
  static std::string render(const Complex& v) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << v.real() << "," << v.imag() << ")";
    return os.str();
  }
};

}  // namespace rdb
