// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.

#include <catch2/catch_amalgamated.hpp>

#include "rdb/bounds.hpp"

using namespace rdb;

TEST_CASE("theta spot values and minimality", "[bounds]") {
  // theta(d,k) is the least r with (k+1)(r-k) >= binom(k+d+1,d) - (k+2).
  for (unsigned d = 3; d <= 8; ++d) {
    for (unsigned long k = 1; k <= 12; ++k) {
      Natural r = theta(d, Natural(k));
      Natural thr = nat_sub(binom(Natural(k) + d + 1, d), Natural(k + 2));
      CHECK(Natural(k + 1) * (r - k) >= thr);
      CHECK(Natural(k + 1) * (r - k - 1) < thr);
    }
  }
  CHECK_THROWS_AS(theta(2, Natural(1)), DomainError);
  CHECK_THROWS_AS(theta(3, Natural(0)), DomainError);
}

TEST_CASE("dimension formulas", "[bounds]") {
  CHECK(dim_param_hyp(3, Natural(778)) ==
        Natural(binom(Natural(781), 3) - 1));
  CHECK(dim_moduli_hyp(3, Natural(778)) == 78485029);
  CHECK(dim_param_hyp(4, Natural(63)) == 766479);
  CHECK(dim_moduli_hyp(3, Natural(1)) == 0);  // 4 - 4: boundary case
  CHECK_THROWS_AS(dim_moduli_hyp(2, Natural(5)), DomainError);
}

TEST_CASE("slack inequalities at the worked-example points", "[bounds]") {
  CHECK(waldron_ok(3, Natural(778), Natural(63)).slack == 0);
  CHECK(waldron_ok(4, Natural(63), Natural(8)).slack == 0);
  IntersectionType quartic_chain = IntersectionType::chain(4);
  CHECK(debarre_manivel_ok(quartic_chain, Natural(100), Natural(5)).holds);
  IntersectionType quadrics({{2, Natural(3)}});
  CHECK_THROWS_AS(debarre_manivel_ok(quadrics, Natural(10), Natural(1)),
                  DomainError);
}

TEST_CASE("psi towers", "[bounds]") {
  const auto v = psi(4, Natural(8));
  REQUIRE(v.size() == 4);
  CHECK(v[0] == 8);
  CHECK(v[1] == 63);
  CHECK(v[2] == 778);
  CHECK(v[3] == 1557);

  const auto w = psi(5, Natural(9));
  REQUIRE(w.size() == 5);
  CHECK(w[4] + 1 == Natural("54097786526"));
  CHECK(dim_moduli_hyp(3, w[3]) ==
        Natural("3298353885918738132194252727911"));
}

TEST_CASE("phi branches", "[bounds]") {
  // phi(5,11): the moduli branch wins; this is the G(17) witness value.
  auto p = phi(5, Natural(11));
  CHECK(p.value == Natural("348489762716"));
  CHECK(p.source == Branch::moduli);
  // Even at k = 1 the chain moduli term dominates the factorial ratio:
  // dim M(4; theta(4,1)) = dim M(4; 7) = 420 > 5!/4! = 5.
  auto q = phi(4, Natural(1));
  CHECK(q.source == Branch::moduli);
  CHECK(q.value == dim_moduli_chain(4, Natural(7)));
  CHECK(q.value == 420);
}

TEST_CASE("G spot values", "[bounds]") {
  const unsigned long table[] = {2,        3,         4,       5,      9,
                                 21,       109,       325,     1681,   15121,
                                 151201,   1663201,   19958401, 259459201};
  for (unsigned m = 1; m <= 14; ++m) CHECK(G(m).value == table[m - 1]);
  CHECK(G(15).value == Natural("3632428801"));
  CHECK(G(16).value == Natural("54486432001"));
  // Definition-derived value; the printed table carries a discrepancy here.
  CHECK(G(17).value == Natural("348489762717"));
  CHECK(G(18).value == Natural("2964061900801"));
  CHECK(G(15).witness_d.has_value());
}

TEST_CASE("Phi and F spot values", "[bounds]") {
  CHECK(Phi(4, Natural(8)).value == 78485042);
  CHECK(Phi(4, Natural(12)).value == Natural("871782912000"));
  CHECK(Phi(5, Natural(9)).value ==
        Natural("3298353885918738132194252727926"));
  CHECK(F(4).value == 5);
  CHECK(F(13).value == 78485043);
  CHECK(F(14).value == Natural("320082459"));
  CHECK(F(17).value == Natural("871782912001"));
  CHECK(F(18).value == Natural("14820309504001"));
}

TEST_CASE("brauer classical bound", "[bounds]") {
  CHECK(brauer(5) == 25);
  CHECK(brauer(2) == 2);
  CHECK_THROWS_AS(brauer(1), DomainError);
}

TEST_CASE("table rows carry ratios and witnesses", "[bounds]") {
  BoundsRow r10 = bounds_row(10);
  CHECK(r10.G_value == 15121);
  CHECK(r10.F_value == 60481);
  CHECK(r10.ratio == "4.000");

  BoundsRow r21 = bounds_row(21);
  CHECK(r21.ratio == "5.000");
  CHECK(r21.G_witness == "(m−6)-plane on τ_{1,…,5}");
  CHECK(r21.F_witness == "(m−5)-plane on τ_{1,2,3,4}");
}

TEST_CASE("plane witness strings", "[bounds]") {
  CHECK(plane_witness(4) == "(m−5)-plane on τ_{1,2,3,4}");
  CHECK(plane_witness(5) == "(m−6)-plane on τ_{1,…,5}");
  CHECK(plane_witness(9) == "(m−10)-plane on τ_{1,…,9}");
}

TEST_CASE("omega machinery stays rigorous", "[bounds]") {
  // Exact and log-domain Omega agree where both are available.
  auto o = omega(6, 50);
  REQUIRE(o.exact.has_value());
  // The rigorous log interval must agree with the log of the exact value
  // (decidable comparisons need a strict separation, hence the +/-1 pad).
  const HPReal lx = HPReal::log_of(*o.exact);
  CHECK(o.log_value.le(lx + Rational(1)));
  CHECK(lx.le(o.log_value + Rational(1)));
  // The simplified condition implies the full condition on its domain.
  for (unsigned d = 6; d <= 9; ++d) {
    unsigned m = d * d - d + 4;
    if (simplified_omega_check(d, m)) CHECK(omega_condition_check(d, m));
  }
}
