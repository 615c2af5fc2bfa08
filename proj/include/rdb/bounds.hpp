// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// The bounding functions: theta, dimension counts, phi/G, psi/Phi/F, the
// threshold predicates, and the Table 1 / Table 2 row generators.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdb/exact.hpp"
#include "rdb/hpreal.hpp"
#include "rdb/itype.hpp"

namespace rdb {

// ---------------------------------------------------------------------------
// theta and the dimension formulas.

// theta(d,k): the least r with (k+1)(r-k) >= sum_{i=2}^{d} binom(k+i,i),
// in closed form k + ceil((binom(k+d+1,d) - (k+2)) / (k+1)).
inline Natural theta(unsigned d, const Natural& k) {
  if (d < 3) throw DomainError("theta: requires d >= 3");
  if (sgn(k) <= 0) throw DomainError("theta: requires k >= 1");
  Natural top = nat_sub(binom(k + d + 1, d), k + 2);
  return k + ceil_div(top, k + 1);
}

inline Natural dim_param_hyp(unsigned d, const Natural& r) {
  if (d < 1) throw DomainError("dim_param_hyp: requires d >= 1");
  return nat_sub(binom(r + d, d), Natural(1));
}

inline Natural dim_moduli_hyp(unsigned d, const Natural& r) {
  if (d < 1) throw DomainError("dim_moduli_hyp: requires d >= 1");
  Integer v = binom(r + d, d) - (r + 1) * (r + 1);
  if (sgn(v) < 0) throw DomainError("dim_moduli_hyp: empty moduli space");
  return v;
}

inline Natural dim_param_chain(unsigned d, const Natural& r) {
  if (d < 2) throw DomainError("dim_param_chain: requires d >= 2");
  Integer v = binom(r + d + 1, d) - (r + d + 1);
  if (sgn(v) < 0) throw DomainError("dim_param_chain: negative dimension");
  return v;
}

inline Natural dim_moduli_chain(unsigned d, const Natural& r) {
  if (d < 2) throw DomainError("dim_moduli_chain: requires d >= 2");
  Integer v = binom(r + d + 1, d) - (r + 1) * (r + 1) - (r + d);
  if (sgn(v) < 0) throw DomainError("dim_moduli_chain: empty moduli space");
  return v;
}

// ---------------------------------------------------------------------------
// Slack inequalities (Waldron; Debarre--Manivel).

struct SlackResult {
  bool holds;
  Integer slack;
};

inline SlackResult waldron_ok(unsigned d, const Natural& r, const Natural& k) {
  if (d < 3) throw DomainError("waldron_ok: requires d >= 3");
  Integer slack = (k + 1) * (Integer(r) - Integer(k)) - binom(k + d, d);
  return {sgn(slack) >= 0, slack};
}

inline SlackResult debarre_manivel_ok(const IntersectionType& type,
                                      const Natural& r, const Natural& k) {
  if (type.counts().empty())
    throw DomainError("debarre_manivel_ok: empty intersection type");
  bool only_quadrics = true;
  for (auto& [deg, mult] : type.counts())
    if (deg != 2) only_quadrics = false;
  if (only_quadrics)
    throw DomainError("debarre_manivel_ok: quadric-only type is excluded");
  Integer sum = 0;
  for (auto& [deg, mult] : type.counts()) sum += mult * binom(k + deg, deg);
  Integer slack = (k + 1) * (Integer(r) - Integer(k)) - sum;
  return {sgn(slack) >= 0, slack};
}

// ---------------------------------------------------------------------------
// phi and G.

enum class Branch { factorial, moduli };

inline const char* branch_name(Branch b) {
  return b == Branch::factorial ? "factorial" : "moduli";
}

struct ValueWithSource {
  Natural value;
  Branch source;
};

inline ValueWithSource phi(unsigned d, const Natural& k) {
  if (d < 4) throw DomainError("phi: requires d >= 4");
  if (sgn(k) <= 0) throw DomainError("phi: requires k >= 1");
  Natural fact = factorial_ratio(Natural(d) + k, Natural(d));
  Natural mod = dim_moduli_chain(d, theta(d, k));
  if (mod > fact) return {mod, Branch::moduli};
  return {fact, Branch::factorial};
}

struct BoundValue {
  Natural value;
  std::optional<unsigned> witness_d;  // smallest minimizing d, when minimized
};

inline BoundValue G(unsigned m) {
  if (m < 1) throw DomainError("G: requires m >= 1");
  static const unsigned long small[] = {2,       3,        4,       5,
                                        9,       21,       109,     325,
                                        1681,    15121,    151201,  1663201,
                                        19958401, 259459201};
  if (m <= 14) return {Natural(small[m - 1]), std::nullopt};
  // G(m) = 1 + min over 4 <= d <= m-2 of phi(d, m-d-1); the definitional
  // upper limit m-1 is capped at m-2 so that k = m-d-1 stays >= 1.
  Natural best;
  unsigned best_d = 0;
  for (unsigned d = 4; d + 2 <= m; ++d) {
    Natural v = phi(d, Natural(m - d - 1)).value;
    if (best_d == 0 || v < best) {
      best = v;
      best_d = d;
    }
  }
  return {best + 1, best_d};
}

// ---------------------------------------------------------------------------
// psi, Phi and F.

// psi(d,k)_0..psi(d,k)_{d-1}: the tower recursion plus the final doubling.
inline std::vector<Natural> psi(unsigned d, const Natural& k) {
  if (d < 3) throw DomainError("psi: requires d >= 3");
  if (sgn(k) <= 0) throw DomainError("psi: requires k >= 1");
  std::vector<Natural> v{k};
  for (unsigned i = 0; i + 2 < d; ++i) {
    unsigned e = d - i;
    const Natural& p = v.back();
    v.push_back(p + ceil_div(binom(p + e, e), p + 1));
  }
  v.push_back(2 * v.back() + 1);
  return v;
}

// The moduli branch of Phi: dim M(3; psi(d,k)_{d-2}) + d + k + 1.
inline Natural phi_big_moduli(unsigned d, const Natural& k) {
  if (d < 3) throw DomainError("phi_big_moduli: requires d >= 3");
  std::vector<Natural> v = psi(d, k);
  return dim_moduli_hyp(3, v[d - 2]) + d + k + 1;
}

inline ValueWithSource Phi(unsigned d, const Natural& k) {
  if (d < 1) throw DomainError("Phi: requires d >= 1");
  if (sgn(k) <= 0) throw DomainError("Phi: requires k >= 1");
  Natural fact = factorial_ratio(Natural(d) + k, Natural(d));
  if (d <= 2) return {fact, Branch::factorial};  // no psi tower below d = 3
  Natural mod = phi_big_moduli(d, k);
  if (mod > fact) return {mod, Branch::moduli};
  return {fact, Branch::factorial};
}

inline BoundValue F(unsigned m) {
  if (m < 1) throw DomainError("F: requires m >= 1");
  if (m <= 4) return {Natural(m + 1), std::nullopt};
  Natural best;
  unsigned best_d = 0;
  for (unsigned d = 1; d + 2 <= m; ++d) {
    Natural k(m - d - 1);
    Natural v;
    if (d <= 2) {
      v = factorial_ratio(Natural(d) + k, Natural(d));
    } else {
      // The moduli branch is non-decreasing in d (psi-chain monotonicity),
      // so once it alone reaches the running minimum no larger d can win.
      Natural mod = phi_big_moduli(d, k);
      if (best_d != 0 && mod >= best) break;
      Natural fact = factorial_ratio(Natural(d) + k, Natural(d));
      v = mod > fact ? mod : fact;
    }
    if (best_d == 0 || v < best) {
      best = v;
      best_d = d;
    }
  }
  return {2 * (best / 2) + 1, best_d};
}

inline Natural brauer(unsigned m) {
  if (m < 2) throw DomainError("brauer: requires m >= 2");
  return factorial(m - 1) + 1;
}

// ---------------------------------------------------------------------------
// Table rows.

struct BoundsRow {
  unsigned m = 0;
  Natural G_value;
  Natural F_value;
  std::string ratio;  // F/G to 3 decimals, round half to even
  std::optional<unsigned> G_witness_d;
  std::optional<unsigned> F_witness_d;
  std::string G_witness;  // plane-witness string, empty when no witness
  std::string F_witness;
};

// "(m-d-1)-plane on tau_{1,...,d}", rendered with the typographic minus and
// ellipsis used in the tables.
inline std::string plane_witness(unsigned d) {
  std::string subs;
  if (d <= 4) {
    for (unsigned i = 1; i <= d; ++i) {
      if (i > 1) subs += ",";
      subs += std::to_string(i);
    }
  } else {
    subs = "1,…," + std::to_string(d);
  }
  return "(m−" + std::to_string(d + 1) + ")-plane on τ_{" + subs + "}";
}

inline BoundsRow bounds_row(unsigned m) {
  BoundsRow row;
  row.m = m;
  BoundValue g = G(m), f = F(m);
  row.G_value = g.value;
  row.F_value = f.value;
  Rational q(row.F_value, row.G_value);
  q.canonicalize();
  row.ratio = decimal_string(q, 3);
  row.G_witness_d = g.witness_d;
  row.F_witness_d = f.witness_d;
  if (g.witness_d) row.G_witness = plane_witness(*g.witness_d);
  if (f.witness_d) row.F_witness = plane_witness(*f.witness_d);
  return row;
}

inline std::vector<BoundsRow> bounds_table(unsigned from, unsigned to) {
  if (from < 1 || to < from) throw DomainError("bounds_table: bad range");
  std::vector<BoundsRow> rows;
  for (unsigned m = from; m <= to; ++m) rows.push_back(bounds_row(m));
  return rows;
}

// ---------------------------------------------------------------------------
// Threshold predicates.

// theta(d, m-d-1) <= m-d-2 + binom(m, d).
inline bool theta_upper_bound_check(unsigned d, unsigned m) {
  if (d < 4) throw DomainError("theta_upper_bound_check: requires d >= 4");
  if (m < d + 2) throw DomainError("theta_upper_bound_check: requires m > d+1");
  Natural lhs = theta(d, Natural(m - d - 1));
  Natural rhs = Natural(m - d - 2) + binom(Natural(m), d);
  return lhs <= rhs;
}

// Exact comparison phi(d+1, m-d-2) < phi(d, m-d-1) in the regime where the
// analytic sufficient condition applies.
inline bool varphi_condition_check(unsigned d, unsigned m) {
  if (d < 4) throw DomainError("varphi_condition_check: requires d >= 4");
  if (m < 2 * d * d + 7 * d + 6)
    throw DomainError("varphi_condition_check: requires m >= 2d^2+7d+6");
  return phi(d + 1, Natural(m - d - 2)).value < phi(d, Natural(m - d - 1)).value;
}

// log c_d = -sum_{i=3}^{d-1} (i-2)! * log(i!).
inline HPReal frak_c_log(unsigned d) {
  if (d < 4) throw DomainError("frak_c_log: requires d >= 4");
  HPReal sum = HPReal::exact(0L);
  for (unsigned i = 3; i < d; ++i)
    sum = sum - HPReal::log_of(Integer(factorial(i))) * factorial(i - 2);
  return sum;
}

// Linear-domain c_d = 1 / prod_{i=3}^{d-1} (i!)^{(i-2)!}, when small enough
// to materialize.
inline std::optional<Rational> frak_c_exact(unsigned d,
                                            size_t digit_budget = 200000) {
  if (d < 4) throw DomainError("frak_c_exact: requires d >= 4");
  Natural den(1);
  for (unsigned i = 3; i < d; ++i) {
    Natural e = factorial(i - 2);
    if (!e.fits_ulong_p()) return std::nullopt;
    Natural f = factorial(i);
    if (digit_count(f) * e.get_ui() > digit_budget) return std::nullopt;
    den *= pow_nat(f, e.get_ui());
    if (digit_count(den) > digit_budget) return std::nullopt;
  }
  Rational q(Natural(1), den);
  q.canonicalize();
  return q;
}

struct OmegaValue {
  HPReal log_value;                  // log Omega(d, m), rigorous interval
  std::optional<Rational> exact;     // Omega itself, when materializable
};

// Omega(d, m) = c_d * (m-d-1)^{(d-2)!}, exposed in the log domain.
inline OmegaValue omega(unsigned d, unsigned m, size_t digit_budget = 200000) {
  if (d < 4) throw DomainError("omega: requires d >= 4");
  if (m < d + 2) throw DomainError("omega: requires m >= d+2");
  Natural base(m - d - 1);
  Natural expo = factorial(d - 2);
  HPReal log_v = frak_c_log(d) + HPReal::log_of(Integer(base)) * expo;
  std::optional<Rational> lin;
  if (expo.fits_ulong_p() &&
      (digit_count(base) + 1) * expo.get_ui() <= digit_budget) {
    if (auto c = frak_c_exact(d, digit_budget)) {
      Rational q = *c * Rational(pow_nat(base, expo.get_ui()));
      q.canonicalize();
      lin = q;
    }
  }
  return {log_v, lin};
}

// Full Omega condition: m^2 - (5/2)m + 1/2 <
//   (d+1) + (d+1/2)·log d + 6(d-3)!·(d-2-log(d-1)).
inline bool omega_condition_check(unsigned d, unsigned m) {
  if (d < 6) throw DomainError("omega_condition_check: requires d >= 6");
  if (m < d * d - d + 4)
    throw DomainError("omega_condition_check: requires m >= d^2-d+4");
  Rational lhs(Integer(2) * m * m - Integer(5) * m + 1, Integer(2));
  lhs.canonicalize();
  HPReal rhs = HPReal::exact(Integer(d + 1)) +
               HPReal::log_of(Integer(d)) * Rational(2 * d + 1, 2) +
               (HPReal::exact(Integer(Integer(d) - 2)) -
                HPReal::log_of(Integer(d - 1))) *
                   Integer(Integer(6) * factorial(d - 3));
  return HPReal::exact(lhs).lt(rhs);
}

// Simplified condition: m^2 - (5/2)m <= 6(d-3)! + 2d + 1, exactly.
inline bool simplified_omega_check(unsigned d, unsigned m) {
  if (d < 6) throw DomainError("simplified_omega_check: requires d >= 6");
  if (m < d * d - d + 4)
    throw DomainError("simplified_omega_check: requires m >= d^2-d+4");
  Integer lhs = Integer(2) * m * m - Integer(5) * m;
  Integer rhs = Integer(2) * (Integer(6) * factorial(d - 3) + 2 * d + 1);
  return lhs <= rhs;
}

// ---------------------------------------------------------------------------
// Check reports.

struct CheckReport {
  unsigned long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) failures.push_back(what);
  }
};

// The three analytic lemmas behind the growth-rate comparison, verified with
// rigorous interval arithmetic over their full stated sweeps.
inline CheckReport analytic_inequality_suite() {
  CheckReport rep;
  // log(C_d / (d+1)) <= d + 3/2 with C_d the largest binomial in row d+1.
  for (unsigned d = 4; d <= 40; ++d) {
    Natural cd = 0;
    for (unsigned i = 0; i <= d + 1; ++i) {
      Natural b = binom(Natural(d + 1), i);
      if (b > cd) cd = b;
    }
    Rational arg(cd, Natural(d + 1));
    arg.canonicalize();
    bool ok = HPReal::log_of(arg).le(Rational(2 * d + 3, 2));
    rep.expect(ok, "log(C_d/(d+1)) bound failed at d=" + std::to_string(d));
  }
  // Stirling: sqrt(2*pi) a^{a+1/2} e^{-a} <= a! <= a^{a+1/2} e^{1-a}.
  for (unsigned a = 1; a <= 500; ++a) {
    HPReal la = HPReal::log_of(Integer(a));
    HPReal lfact = HPReal::log_of(Integer(factorial(a)));
    HPReal main = la * Rational(2 * a + 1, 2);
    HPReal lower = HPReal::log_two_pi() * Rational(1, 2) + main -
                   HPReal::exact(Integer(a));
    HPReal upper = main + HPReal::exact(Integer(1 - static_cast<long>(a)));
    rep.expect(lower.le(lfact), "Stirling lower failed at a=" + std::to_string(a));
    rep.expect(lfact.le(upper), "Stirling upper failed at a=" + std::to_string(a));
  }
  // log c_d >= 2(d-2)! - 2(d-2)!·log(d-1) - 2(d-3)!·log(d-1).
  for (unsigned d = 4; d <= 40; ++d) {
    Integer coef = Integer(2) * factorial(d - 2) + Integer(2) * factorial(d - 3);
    HPReal lower = HPReal::exact(Integer(Integer(2) * factorial(d - 2))) -
                   HPReal::log_of(Integer(d - 1)) * coef;
    rep.expect(lower.le(frak_c_log(d)),
               "log c_d lower bound failed at d=" + std::to_string(d));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// psi-chain monotonicity, with a log-interval fallback once the exact tower
// values outgrow a digit budget.

struct ChainValue {
  bool is_exact = true;
  Natural n;
  HPReal log;
};

// psi(d, k)_{d-2} for the monotonicity chain; d = 2 means psi(2,k)_0 = k.
inline ChainValue psi_chain_value(unsigned d, const Natural& k,
                                  size_t digit_budget = 20000) {
  ChainValue cv;
  if (d < 2) throw DomainError("psi_chain_value: requires d >= 2");
  cv.n = k;
  for (unsigned i = 0; i + 2 < d; ++i) {
    unsigned e = d - i;
    if (cv.is_exact) {
      if ((digit_count(cv.n) + 1) * e > digit_budget) {
        cv.log = HPReal::log_of(Integer(cv.n));
        cv.is_exact = false;
      } else {
        cv.n = cv.n + ceil_div(binom(cv.n + e, e), cv.n + 1);
        continue;
      }
    }
    // Log-domain step.  With T = binom(psi+e, e)/(psi+1):
    //   psi^{e-1}/e! <= T  and  T <= (psi+e)^e/(e! psi),
    // and the ceiling adds at most 1, absorbed by a final log-add with log 1.
    HPReal logfac = HPReal::log_of(Integer(factorial(e)));
    HPReal t_lo = cv.log * Integer(e - 1) - logfac;
    HPReal t_hi = HPReal::log_add(cv.log, HPReal::log_of(Integer(e))) *
                      Integer(e) -
                  logfac - cv.log;
    HPReal t = HPReal::hull(t_lo, t_hi);
    HPReal s = HPReal::log_add(cv.log, t);
    cv.log = HPReal::hull(s, HPReal::log_add(s, HPReal::exact(0L)));
  }
  return cv;
}

inline bool chain_le(const ChainValue& a, const ChainValue& b) {
  if (a.is_exact && b.is_exact) return a.n <= b.n;
  HPReal la = a.is_exact ? HPReal::log_of(Integer(a.n)) : a.log;
  HPReal lb = b.is_exact ? HPReal::log_of(Integer(b.n)) : b.log;
  return la.le(lb);
}

// psi(2,m-3)_0 <= psi(3,m-4)_1 <= ... <= psi(m-2,1)_{m-4}.
inline bool psi_monotonicity_check(unsigned m) {
  if (m < 4) throw DomainError("psi_monotonicity_check: requires m >= 4");
  ChainValue prev = psi_chain_value(2, Natural(m - 3));
  for (unsigned d = 3; d + 2 <= m; ++d) {
    ChainValue cur = psi_chain_value(d, Natural(m - d - 1));
    if (!chain_le(prev, cur)) return false;
    prev = cur;
  }
  return true;
}

// ---------------------------------------------------------------------------
// G vs F comparison.

struct ComparisonReport {
  CheckReport report;
  std::vector<unsigned> equality;  // m with G(m) = F(m)
};

inline ComparisonReport comparison_check(unsigned m_max) {
  if (m_max < 16) throw DomainError("comparison_check: requires m_max >= 16");
  ComparisonReport out;
  for (unsigned m = 1; m <= m_max; ++m) {
    Natural g = G(m).value, f = F(m).value;
    out.report.expect(g <= f, "G(m) > F(m) at m=" + std::to_string(m));
    if (g == f) out.equality.push_back(m);
  }
  std::vector<unsigned> expected;
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 15u, 16u})
    if (m <= m_max) expected.push_back(m);
  out.report.expect(out.equality == expected,
                    "G = F equality set differs from {1,2,3,4,5,15,16}");
  return out;
}

}  // namespace rdb
