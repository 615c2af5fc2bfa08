// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Deterministic seeded randomness.  std::mt19937_64 has a standardized
// output sequence, so distributions built only on its raw 64-bit draws are
// reproducible across platforms; we avoid std::uniform_*_distribution,
// whose mapping is implementation-defined.
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "rdb/exact.hpp"

namespace rdb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n) by rejection, so the result is unbiased and
  // platform-independent.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

  std::complex<double> complex_unit() {
    const double re = symmetric();
    const double im = symmetric();
    return {re, im};
  }

  // Small rational p/q with |p| <= bound, 1 <= q <= bound.
  Rational small_rational(unsigned bound = 9) {
    const long p =
        static_cast<long>(below(2 * bound + 1)) - static_cast<long>(bound);
    const long q = static_cast<long>(below(bound)) + 1;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  // Nonzero small rational (for coefficients that must not vanish).
  Rational small_rational_nonzero(unsigned bound = 9) {
    for (;;) {
      Rational r = small_rational(bound);
      if (sgn(r) != 0) return r;
    }
  }

  std::vector<std::complex<double>> complex_vector(std::size_t n) {
    std::vector<std::complex<double>> v(n);
    for (auto& z : v) z = complex_unit();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rdb
