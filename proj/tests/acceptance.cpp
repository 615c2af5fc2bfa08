// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Acceptance driver: one PASS/FAIL line per criterion.  Recorded errata in
// the published tables are treated as flags (reported, not failed) when the
// recomputed value is the documented correction.  Pass --slow to include the
// long n = 19 depth-2 numeric rehearsal.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rdb/bounds.hpp"
#include "rdb/ledger.hpp"
#include "rdb/planes.hpp"
#include "rdb/polar.hpp"
#include "rdb/rng.hpp"
#include "rdb/solve.hpp"

using namespace rdb;

namespace {

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;   // informational flags
  std::vector<std::string> errors;  // failures
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      errors.push_back(what);
    }
  }
  void flag(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- criterion 1: Table 1 ---------------------------------------------------

void criterion1(Criterion& c) {
  static const std::map<unsigned, std::pair<const char*, const char*>> table{
      {2, {"3", "3"}},
      {3, {"4", "4"}},
      {4, {"5", "5"}},
      {5, {"9", "9"}},
      {6, {"21", "41"}},
      {7, {"109", "121"}},
      {8, {"325", "841"}},
      {9, {"1681", "6721"}},
      {10, {"15121", "60481"}},
      {11, {"151201", "604801"}},
      {12, {"1663201", "6652801"}},
      {13, {"19958401", "78485043"}},
      {14, {"259459201", "320082459"}},
      {15, {"3632428801", "3632428801"}},
      {16, {"54486432001", "54486432001"}},
      {17, {"348489068134", "871782912001"}},  // printed G is an erratum
      {18, {"2964061900801", "14820309504001"}},
  };
  for (const auto& [m, gf] : table) {
    const Natural g = G(m).value, f = F(m).value;
    if (m == 17) {
      c.expect(g == Natural("348489762717"),
               "G(17) definition-derived value mismatch");
      c.flag("G(17): table prints " + std::string(gf.first) +
             ", definition gives " + dec(g));
    } else {
      c.expect(g == Natural(gf.first), "G(" + std::to_string(m) + ") != " +
                                           gf.first + " (got " + dec(g) + ")");
    }
    c.expect(f == Natural(gf.second), "F(" + std::to_string(m) + ") != " +
                                          gf.second + " (got " + dec(f) + ")");
  }
}

// ---- criterion 2: Table 2 ---------------------------------------------------

const char* printed_ratio(unsigned m) {
  if (m <= 24) return "5.000";
  if (m == 25) return "29.930";
  if (m <= 33) return "30.000";
  if (m == 34) return "146.129";
  if (m <= 43) return "210.000";
  if (m == 44) return "294.103";
  if (m <= 55) return "1680.000";
  if (m == 56) return "2613.173";
  if (m <= 58) return "15120.000";
  return "3024.000";
}

unsigned printed_g_witness(unsigned m) {
  if (m <= 24) return 5;
  if (m <= 33) return 6;
  if (m <= 43) return 7;
  if (m <= 55) return 8;
  return 9;
}

void criterion2(Criterion& c) {
  // Recomputed corrections for the four recorded errata rows.
  static const std::map<unsigned, const char*> corrected{
      {25, "27.993"}, {44, "294.102"}, {56, "2613.176"}, {59, "15120.000"}};
  for (const BoundsRow& row : bounds_table(19, 59)) {
    const unsigned m = row.m;
    auto fix = corrected.find(m);
    if (fix != corrected.end()) {
      c.expect(row.ratio == fix->second,
               "ratio at m=" + std::to_string(m) + " got " + row.ratio);
      c.flag("m=" + std::to_string(m) + ": table prints ratio " +
             printed_ratio(m) + ", recomputed " + row.ratio);
    } else {
      c.expect(row.ratio == printed_ratio(m),
               "ratio at m=" + std::to_string(m) + " got " + row.ratio);
    }
    c.expect(row.G_witness_d && *row.G_witness_d == printed_g_witness(m),
             "G witness d at m=" + std::to_string(m));
    c.expect(row.F_witness_d && *row.F_witness_d == 4,
             "F witness d at m=" + std::to_string(m));
    if (m == 59)
      c.flag("m=59: table prints F witness d=5, recomputed d=4");
    c.expect(row.G_witness == plane_witness(printed_g_witness(m)),
             "G witness string at m=" + std::to_string(m));
    c.expect(row.F_witness == plane_witness(4),
             "F witness string at m=" + std::to_string(m));
  }
}

// ---- criterion 3: exact example regressions --------------------------------

void criterion3(Criterion& c) {
  c.expect(dim_moduli_hyp(3, Natural(778)) == Natural("78485029"),
           "dim M(3;778)");
  c.expect(dim_param_hyp(4, Natural(63)) == Natural("766479"), "dim H(4;63)");
  SlackResult s1 = waldron_ok(3, Natural(778), Natural(63));
  SlackResult s2 = waldron_ok(4, Natural(63), Natural(8));
  c.expect(s1.holds && s1.slack == 0, "slack at (3,778,63)");
  c.expect(s2.holds && s2.slack == 0, "slack at (4,63,8)");
  c.expect(psi(4, Natural(8)) ==
               std::vector<Natural>{Natural(8), Natural(63), Natural(778),
                                    Natural(1557)},
           "psi(4,8)");
  std::vector<Natural> p59 = psi(5, Natural(9));
  c.expect(p59[4] + 1 == Natural("54097786526"), "psi(5,9)_4 + 1");
  c.expect(dim_moduli_hyp(3, p59[3]) ==
               Natural("3298353885918738132194252727911"),
           "dim M(3;psi(5,9)_3)");
  c.expect(Natural(5) * pow_nat(Natural(4), 10) * pow_nat(Natural(3), 55) ==
               Natural("914616279415496004448658427740160"),
           "5*4^10*3^55");
}

// ---- criterion 4: ledger audit ----------------------------------------------

void criterion4(Criterion& c) {
  LedgerReport n6 = audit_ledger("n6");
  c.expect(n6.pass() && n6.flags() == 0, "case n6");
  c.expect(n6.max_extension_degree == 20, "n6 max extension degree");
  for (unsigned k = 1; k <= 9; ++k) {
    LedgerReport rep = audit_ledger("k" + std::to_string(k));
    c.expect(rep.pass(), "case k" + std::to_string(k));
    c.expect(rep.max_extension_degree == eta(k),
             "max extension degree at k=" + std::to_string(k));
    const unsigned expect_flags = k == 9 ? 2 : (k == 2 ? 1 : 0);
    c.expect(rep.flags() == expect_flags,
             "flag count at k=" + std::to_string(k));
    for (const auto& chk : rep.checks) {
      if (chk.flagged)
        c.flag("k" + std::to_string(k) + ": " + chk.description +
               " (printed " + chk.expected + ", recomputed " + chk.computed +
               ")");
    }
  }
}

// ---- criterion 5: polar identity suite --------------------------------------

void criterion5(Criterion& c) {
  Rng rng(20260501);
  for (unsigned t = 0; t < 1000; ++t) {
    const unsigned r = 1 + static_cast<unsigned>(rng.below(4));
    const unsigned d = 2 + static_cast<unsigned>(rng.below(4));
    HPoly<Rational> f(r + 1, d);
    for (unsigned term = 0; term < r + 4; ++term) {
      std::vector<unsigned> e(r + 1, 0);
      for (unsigned i = 0; i < d; ++i) e[rng.below(r + 1)] += 1;
      f.add_term(e, rng.small_rational());
    }
    if (f.is_zero()) {
      std::vector<unsigned> e(r + 1, 0);
      e[0] = d;
      f.add_term(e, Rational(1));
    }
    std::vector<Rational> vp{Rational(1)}, vq{Rational(1)};
    for (unsigned j = 0; j < r; ++j) {
      vp.push_back(rng.small_rational());
      vq.push_back(rng.small_rational());
    }
    const bool ok = technical_identity_check(
        f, PPoint<Rational>(vp), PPoint<Rational>(vq), rng.small_rational(),
        rng.small_rational());
    c.expect(ok, "polar identity at trial " + std::to_string(t));
    if (!ok) return;
  }
}

// ---- criterion 6: Bertini suite ----------------------------------------------

void criterion6(Criterion& c) {
  // Fermat cubic line, exact.
  HPoly<Rational> fermat(4, 3);
  fermat.add_term({3, 0, 0, 0}, Rational(1));
  fermat.add_term({0, 3, 0, 0}, Rational(1));
  fermat.add_term({0, 0, 3, 0}, Rational(1));
  fermat.add_term({0, 0, 0, 3}, Rational(1));
  HSystem<Rational> V{3, {fermat}};
  PPoint<Rational> P0({Rational(1), Rational(-1), Rational(0), Rational(0)});
  PPoint<Rational> Q0({Rational(0), Rational(0), Rational(1), Rational(-1)});
  c.expect(cone_system(V, P0).contains(Q0.coords()),
           "Fermat cubic cone membership");
  c.expect(contains_plane(V, {P0, Q0}), "Fermat cubic line containment");

  Rng rng(20260601);
  unsigned done = 0;
  while (done < 200) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(5));
    const unsigned d = 2 + static_cast<unsigned>(rng.below(2));
    std::vector<Rational> pv{Rational(1)}, qv{Rational(0), Rational(1)};
    for (unsigned j = 0; j < r; ++j) pv.push_back(rng.small_rational());
    for (unsigned j = 0; j + 1 < r; ++j) qv.push_back(rng.small_rational());
    PPoint<Rational> P(pv), Q(qv);
    std::vector<Rational> a(r + 1);
    for (unsigned j = 2; j <= r; ++j) a[j] = rng.small_rational();
    Rational rp(0), rq(0);
    for (unsigned j = 2; j <= r; ++j) {
      rp += a[j] * P[j];
      rq += a[j] * Q[j];
    }
    a[1] = -rq;
    a[0] = -rp - a[1] * P[1];
    HPoly<Rational> l(r + 1, 1);
    for (unsigned j = 0; j <= r; ++j) {
      std::vector<unsigned> e(r + 1, 0);
      e[j] = 1;
      l.add_term(e, a[j]);
    }
    HPoly<Rational> m(r + 1, d - 1);
    for (unsigned t = 0; t < r + 3; ++t) {
      std::vector<unsigned> e(r + 1, 0);
      unsigned rem = d - 1;
      for (unsigned j = 0; j + 1 < r + 1; ++j) {
        unsigned v = static_cast<unsigned>(rng.below(rem + 1));
        e[j] = v;
        rem -= v;
      }
      e[r] = rem;
      m.add_term(e, rng.small_rational());
    }
    if (l.is_zero() || m.is_zero()) continue;
    HPoly<Rational> f = l * m;
    if (f.is_zero()) continue;
    HSystem<Rational> W{r, {f}};
    HSystem<Rational> C = cone_system(W, P);
    c.expect(C.contains(Q.coords()),
             "cone membership at instance " + std::to_string(done));
    c.expect(contains_plane(W, {P, Q}),
             "line containment at instance " + std::to_string(done));
    if (!c.pass) return;
    ++done;
  }
}

// ---- criterion 7: numeric plane finding --------------------------------------

HPoly<Complex> random_dense_quadric(Rng& rng, unsigned nvars) {
  HPoly<Complex> f(nvars, 2);
  for (unsigned i = 0; i < nvars; ++i) {
    for (unsigned j = i; j < nvars; ++j) {
      std::vector<unsigned> e(nvars, 0);
      e[i] += 1;
      e[j] += 1;
      f.add_term(e, rng.complex_unit());
    }
  }
  return f;
}

void criterion7(Criterion& c, bool slow) {
  double worst = 0.0;
  for (unsigned seed = 1; seed <= 50 && c.pass; ++seed) {
    Rng rng(seed);
    HSystem<Complex> V{11, {random_dense_quadric(rng, 12)}};
    try {
      auto pts = quadric_k_plane(V, 5, std::nullopt, {seed * 101 + 1});
      worst = std::max(worst, detail::plane_residual(V, pts));
    } catch (const DomainError& e) {
      c.expect(false, std::string("l=1 seed ") + std::to_string(seed) + ": " +
                          e.what());
    }
  }
  for (unsigned seed = 1; seed <= 50 && c.pass; ++seed) {
    Rng rng(1000 + seed);
    HSystem<Complex> V{8,
                       {random_dense_quadric(rng, 9),
                        random_dense_quadric(rng, 9)}};
    try {
      auto pts = quadric_k_plane(V, 2, std::nullopt, {seed * 103 + 7});
      worst = std::max(worst, detail::plane_residual(V, pts));
    } catch (const DomainError& e) {
      c.expect(false, std::string("l=2 seed ") + std::to_string(seed) + ": " +
                          e.what());
    }
  }
  c.expect(worst < 1e-6, "max plane residual " + std::to_string(worst));

  try {
    PipelineReport rep = run_pipeline(9, 1, {20260701});
    c.expect(rep.certified && rep.plane_residual < 1e-6,
             "pipeline n=9 depth=1");
  } catch (const DomainError& e) {
    c.expect(false, std::string("pipeline n=9: ") + e.what());
  }
  if (slow) {
    try {
      PipelineReport rep = run_pipeline(19, 2, {20260702});
      c.expect(rep.certified && rep.plane_residual < 1e-6,
               "pipeline n=19 depth=2");
      c.flag("n=19 plane residual " + std::to_string(rep.plane_residual));
    } catch (const DomainError& e) {
      c.expect(false, std::string("pipeline n=19: ") + e.what());
    }
  } else {
    c.flag("n=19 depth-2 rehearsal runs in the slow suite (--slow)");
  }
}

// ---- criterion 8: inequality sweeps ------------------------------------------

void criterion8(Criterion& c) {
  for (unsigned r = 1; r <= 60 && c.pass; ++r) {
    for (unsigned d = 1; d <= 60; ++d) {
      Natural lhs(0);
      for (unsigned i = 2; i <= d; ++i) lhs += binom(Natural(r + i), i);
      if (lhs != nat_sub(binom(Natural(r + d + 1), d), Natural(r + 2))) {
        c.expect(false, "combinatorial identity at r=" + std::to_string(r) +
                            ", d=" + std::to_string(d));
        break;
      }
    }
  }
  for (unsigned d = 3; d <= 8; ++d) {
    IntersectionType chain = IntersectionType::chain(d);
    for (unsigned long k = 1; k <= 30; ++k) {
      Natural r = theta(d, Natural(k));
      c.expect(debarre_manivel_ok(chain, Natural(r + 1), Natural(k)).holds &&
                   !debarre_manivel_ok(chain, r, Natural(k)).holds,
               "theta minimality at d=" + std::to_string(d) +
                   ", k=" + std::to_string(k));
    }
  }
  for (unsigned d = 4; d <= 58; ++d)
    for (unsigned m = d + 2; m <= 60; ++m)
      c.expect(theta_upper_bound_check(d, m),
               "theta upper bound at d=" + std::to_string(d) +
                   ", m=" + std::to_string(m));
  for (unsigned m = 4; m <= 40; ++m)
    c.expect(psi_monotonicity_check(m),
             "psi-chain monotonicity at m=" + std::to_string(m));
  CheckReport analytic = analytic_inequality_suite();
  c.expect(analytic.ok(), "analytic inequality suite (" +
                              (analytic.failures.empty()
                                   ? std::string("?")
                                   : analytic.failures.front()) +
                              ")");
  ComparisonReport cmp = comparison_check(200);
  c.expect(cmp.report.ok(), "G <= F sweep to 200");
  c.expect(cmp.equality == std::vector<unsigned>{1, 2, 3, 4, 5, 15, 16},
           "equality set");
  for (unsigned d = 11; d <= 13; ++d) {
    const unsigned m = 2 * d * d + 11 * d + 15;
    c.expect(F(m).value > G(m).value * (d + 1),
             "ratio checkpoint at d=" + std::to_string(d));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool slow = argc > 1 && std::strcmp(argv[1], "--slow") == 0;
  struct Entry {
    const char* name;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries{
      {"1 Table 1 regression", criterion1},
      {"2 Table 2 regression", criterion2},
      {"3 exact example regressions", criterion3},
      {"4 proof-ledger audit", criterion4},
      {"5 polar identity suite (1000 trials)", criterion5},
      {"6 Bertini suite (200 instances)", criterion6},
      {"7 numeric plane finding",
       [slow](Criterion& c) { criterion7(c, slow); }},
      {"8 inequality sweeps", criterion8},
  };
  bool all = true;
  for (const auto& e : entries) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    e.run(c);
    const double dt = seconds_since(t0);
    std::cout << "Criterion " << e.name << ": " << (c.pass ? "PASS" : "FAIL")
              << " (" << dt << "s)\n";
    for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
    for (const auto& err : c.errors)
      std::cout << "    error: " << err << "\n";
    all = all && c.pass;
  }
  return all ? 0 : 1;
}
