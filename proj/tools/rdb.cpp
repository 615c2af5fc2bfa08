// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// rdbtool: command-line front end for the bounding functions, sweep checks,
// ledger audits, and numeric plane-finding runs.  Every JSON output embeds a
// run manifest (command line, seed, precision, tolerances, version,
// timestamp) sufficient to reproduce the run bitwise; all integers are
// serialized as decimal strings because the values routinely exceed 2^63.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <iostream>
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
#include "rdb/tschirnhaus.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rdb;

constexpr const char* kVersion = "rdbtool 1.0.0";
constexpr double kResidualTol = 1e-8;
constexpr double kPlaneTol = 1e-6;

std::string timestamp() {
  if (const char* env = std::getenv("RDB_TIMESTAMP")) return env;
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RDB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

json make_manifest(const std::string& command, std::uint64_t seed) {
  json m;
  m["command"] = command;
  m["seed"] = std::to_string(seed);
  m["precision"] = "mpfr-interval-256";
  m["tolerances"] = {{"residual", "1e-8"}, {"plane", "1e-6"}};
  m["version"] = kVersion;
  m["timestamp"] = timestamp();
  return m;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json row_to_json(const BoundsRow& r) {
  json j;
  j["m"] = std::to_string(r.m);
  j["G"] = dec(r.G_value);
  j["F"] = dec(r.F_value);
  j["ratio"] = r.ratio;
  j["G_witness_d"] =
      r.G_witness_d ? json(std::to_string(*r.G_witness_d)) : json(nullptr);
  j["F_witness_d"] =
      r.F_witness_d ? json(std::to_string(*r.F_witness_d)) : json(nullptr);
  j["G_witness"] = r.G_witness;
  j["F_witness"] = r.F_witness;
  return j;
}

void emit_table(const std::vector<BoundsRow>& rows, const std::string& format,
                const json& manifest) {
  if (format == "json") {
    json out;
    out["manifest"] = manifest;
    out["rows"] = json::array();
    for (const auto& r : rows) out["rows"].push_back(row_to_json(r));
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "m,G,F,ratio,G_witness_d,F_witness_d,G_witness,F_witness\n";
  for (const auto& r : rows) {
    std::cout << r.m << ',' << dec(r.G_value) << ',' << dec(r.F_value) << ','
              << r.ratio << ','
              << (r.G_witness_d ? std::to_string(*r.G_witness_d) : "") << ','
              << (r.F_witness_d ? std::to_string(*r.F_witness_d) : "") << ','
              << csv_quote(r.G_witness) << ',' << csv_quote(r.F_witness)
              << "\n";
  }
}

// Renders a CheckReport as text or JSON; returns the exit code.
int emit_report(const CheckReport& rep, const std::string& what,
                const std::string& format, const json& manifest) {
  if (format == "json") {
    json out;
    out["manifest"] = manifest;
    out["checks"] = json::array();
    json summary;
    summary["name"] = what;
    summary["checks_run"] = std::to_string(rep.checks);
    summary["pass"] = rep.ok();
    summary["failures"] = rep.failures;
    out["checks"].push_back(summary);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << what << ": " << (rep.ok() ? "PASS" : "FAIL") << " ("
              << rep.checks << " checks)\n";
    for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int run_check_identities(unsigned max_m, const std::string& format,
                         const json& manifest) {
  CheckReport rep;
  for (unsigned r = 1; r <= max_m; ++r) {
    for (unsigned d = 1; d <= max_m; ++d) {
      Natural lhs(0);
      for (unsigned i = 2; i <= d; ++i) lhs += binom(Natural(r + i), i);
      rep.expect(lhs == nat_sub(binom(Natural(r + d + 1), d), Natural(r + 2)),
                 "combinatorial identity failed at r=" + std::to_string(r) +
                     ", d=" + std::to_string(d));
    }
  }
  for (unsigned d = 4; d < max_m; ++d)
    for (unsigned m = d + 2; m <= max_m; ++m)
      rep.expect(theta_upper_bound_check(d, m),
                 "theta upper bound failed at d=" + std::to_string(d) +
                     ", m=" + std::to_string(m));
  return emit_report(rep, "identities", format, manifest);
}

int run_check_monotone(unsigned max_m, const std::string& format,
                       const json& manifest) {
  CheckReport rep;
  for (unsigned m = 4; m <= max_m; ++m)
    rep.expect(psi_monotonicity_check(m),
               "psi-chain monotonicity failed at m=" + std::to_string(m));
  return emit_report(rep, "monotone", format, manifest);
}

int run_check_comparison(unsigned max_m, const std::string& format,
                         const json& manifest) {
  ComparisonReport cmp = comparison_check(max_m);
  CheckReport rep = cmp.report;
  const std::vector<unsigned> expected{1, 2, 3, 4, 5, 15, 16};
  rep.expect(cmp.equality == expected,
             "equality set differs from {1,2,3,4,5,15,16}");
  return emit_report(rep, "comparison", format, manifest);
}

int run_verify_polar_identity(unsigned trials, std::uint64_t seed,
                              const std::string& format,
                              const json& manifest) {
  Rng rng(seed);
  CheckReport rep;
  for (unsigned t = 0; t < trials; ++t) {
    const unsigned r = 1 + static_cast<unsigned>(rng.below(4));
    const unsigned d = 2 + static_cast<unsigned>(rng.below(4));
    HPoly<Rational> f(r + 1, d);
    for (unsigned term = 0; term < r + 4; ++term) {
      std::vector<unsigned> e(r + 1, 0);
      for (unsigned i = 0; i < d; ++i)
        e[rng.below(r + 1)] += 1;
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
    rep.expect(technical_identity_check(f, PPoint<Rational>(vp),
                                        PPoint<Rational>(vq),
                                        rng.small_rational(),
                                        rng.small_rational()),
               "polar identity failed at trial " + std::to_string(t));
  }
  return emit_report(rep, "polar-identity", format, manifest);
}

int run_verify_bertini(unsigned trials, std::uint64_t seed,
                       const std::string& format, const json& manifest) {
  Rng rng(seed);
  CheckReport rep;
  unsigned done = 0;
  while (done < trials) {
    const unsigned r = 2 + static_cast<unsigned>(rng.below(5));
    const unsigned d = 2 + static_cast<unsigned>(rng.below(2));
    // A form vanishing on the line through P and Q: a linear form through
    // both times a random cofactor; then Q lies on the polar cone at P and
    // the line containment must certify.
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
    // With P_0 = 1, Q_0 = 0, Q_1 = 1: a.Q = 0 fixes a_1, then a.P = 0
    // fixes a_0.
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
    HSystem<Rational> V{r, {f}};
    HSystem<Rational> C = cone_system(V, P);
    rep.expect(C.contains(Q.coords()),
               "cone membership failed at instance " + std::to_string(done));
    rep.expect(contains_plane(V, {P, Q}),
               "line containment failed at instance " + std::to_string(done));
    ++done;
  }
  return emit_report(rep, "bertini", format, manifest);
}

int run_audit(const std::string& case_id, const std::string& format,
              const json& manifest) {
  LedgerReport rep = case_id == "wolfson" ? wolfson_pipeline_audit()
                                          : audit_ledger(case_id);
  if (format == "json") {
    json out;
    out["manifest"] = manifest;
    out["case"] = rep.case_id;
    out["checks"] = json::array();
    for (const auto& c : rep.checks) {
      json j;
      j["description"] = c.description;
      j["expected"] = c.expected;
      j["computed"] = c.computed;
      j["pass"] = c.pass;
      j["flagged"] = c.flagged;
      out["checks"].push_back(j);
    }
    out["max_extension_degree"] = dec(rep.max_extension_degree);
    out["pass"] = rep.pass();
    out["flags"] = std::to_string(rep.flags());
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      const char* mark = c.pass ? "ok  " : (c.flagged ? "FLAG" : "FAIL");
      std::cout << "  [" << mark << "] " << c.description << ": expected "
                << c.expected << ", computed " << c.computed << "\n";
    }
    std::cout << rep.case_id << ": " << (rep.pass() ? "PASS" : "FAIL") << " ("
              << rep.checks.size() << " checks, " << rep.flags()
              << " flagged), max extension degree "
              << dec(rep.max_extension_degree) << "\n";
  }
  return rep.pass() ? 0 : 1;
}

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

int run_find_plane(unsigned quadrics, unsigned k, unsigned dim,
                   std::uint64_t seed) {
  Rng rng(seed);
  HSystem<Complex> V;
  V.r = dim;
  for (unsigned i = 0; i < quadrics; ++i)
    V.polys.push_back(random_dense_quadric(rng, dim + 1));
  SliceConfig cfg;
  cfg.seed = seed + 1;
  cfg.residual_tol = kResidualTol;
  auto pts = quadric_k_plane(V, k, std::nullopt, cfg);
  const double res = detail::plane_residual(V, pts);
  std::cout << "found a " << k << "-plane on " << quadrics
            << " random quadric(s) in P^" << dim << ", residual " << res
            << "\n";
  for (const auto& p : pts) {
    std::cout << " ";
    for (std::size_t j = 0; j < p.size(); ++j)
      std::cout << " " << p[j].real() << (p[j].imag() < 0 ? "-" : "+")
                << std::abs(p[j].imag()) << "i";
    std::cout << "\n";
  }
  if (res >= kPlaneTol) {
    std::cerr << "residual above tolerance\n";
    return 1;
  }
  return 0;
}

int run_tschirnhaus(unsigned n, unsigned upto, std::uint64_t seed) {
  Rng rng(seed);
  GeneralPoly<Complex> p{n, rng.complex_vector(n)};
  TschirnhausResult<Complex> t = build_tschirnhaus(p, upto);
  std::cout << "tschirnhaus system for a random degree-" << n
            << " polynomial (seed " << seed << ")\n";
  for (unsigned m = 1; m <= t.m_max; ++m) {
    std::cout << "  b_" << m << ": degree " << t.b[m - 1].degree() << ", "
              << t.b[m - 1].terms().size() << " terms\n";
  }
  return 0;
}

int run_pipeline_cmd(unsigned n, unsigned depth, std::uint64_t seed) {
  SliceConfig cfg;
  cfg.seed = seed;
  PipelineReport rep = run_pipeline(n, depth, cfg);
  std::cout << "pipeline n=" << n << " depth=" << depth << " seed=" << seed
            << "\n";
  for (const auto& st : rep.stages)
    std::cout << "  " << st.name << ": solve degree " << st.solve_degree
              << ", residual " << st.residual << "\n";
  std::cout << "plane points: " << rep.plane_points.size()
            << ", plane residual " << rep.plane_residual << "\n";
  std::cout << (rep.certified ? "PASS" : "FAIL") << "\n";
  return rep.certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string command = join_args(argc, argv);
  std::uint64_t seed = default_seed();

  CLI::App app{"Exact bounding functions, proof-ledger audits, and numeric "
               "plane finding"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  // ---- bounds -------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "Evaluate bounding functions");
  bounds->require_subcommand(1);
  unsigned arg_m = 0, arg_d = 0;
  std::string arg_k;
  unsigned from1 = 2, to1 = 18, from2 = 19, to2 = 59;
  std::string format1 = "csv", format2 = "csv";
  std::string arg_r;

  auto* b_g = bounds->add_subcommand("g", "G(m)");
  b_g->add_option("--m", arg_m)->required();
  auto* b_f = bounds->add_subcommand("f", "F(m)");
  b_f->add_option("--m", arg_m)->required();
  auto* b_theta = bounds->add_subcommand("theta", "theta(d, k)");
  b_theta->add_option("--d", arg_d)->required();
  b_theta->add_option("--k", arg_k)->required();
  auto* b_phi = bounds->add_subcommand("phi", "phi(d, k)");
  b_phi->add_option("--d", arg_d)->required();
  b_phi->add_option("--k", arg_k)->required();
  auto* b_psi = bounds->add_subcommand("psi", "psi(d, k) tower");
  b_psi->add_option("--d", arg_d)->required();
  b_psi->add_option("--k", arg_k)->required();
  auto* b_dims = bounds->add_subcommand("dims", "dimension formulas at (d, r)");
  b_dims->add_option("--d", arg_d)->required();
  b_dims->add_option("--r", arg_r)->required();
  auto* b_t1 = bounds->add_subcommand("table1", "G/F table");
  b_t1->add_option("--from", from1);
  b_t1->add_option("--to", to1);
  b_t1->add_option("--format", format1)
      ->check(CLI::IsMember({"csv", "json"}));
  auto* b_t2 = bounds->add_subcommand("table2", "ratio table");
  b_t2->add_option("--from", from2);
  b_t2->add_option("--to", to2);
  b_t2->add_option("--format", format2)
      ->check(CLI::IsMember({"csv", "json"}));

  // ---- check ---------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Inequality sweeps");
  check->require_subcommand(1);
  unsigned max_ident = 60, max_mono = 40, max_cmp = 200;
  std::string fmt_check = "text";
  auto* c_ident = check->add_subcommand("identities",
                                        "combinatorial and theta sweeps");
  c_ident->add_option("--max", max_ident);
  auto* c_analytic =
      check->add_subcommand("analytic", "interval-certified inequalities");
  auto* c_mono = check->add_subcommand("monotone", "psi-chain monotonicity");
  c_mono->add_option("--max", max_mono);
  auto* c_cmp = check->add_subcommand("comparison", "G <= F with equality set");
  c_cmp->add_option("--max", max_cmp);
  for (auto* c : {c_ident, c_analytic, c_mono, c_cmp})
    c->add_option("--format", fmt_check)->check(CLI::IsMember({"text", "json"}));

  // ---- verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Property suites");
  verify->require_subcommand(1);
  unsigned trials_polar = 1000, trials_bertini = 200;
  std::string fmt_verify = "text";
  auto* v_polar = verify->add_subcommand("polar-identity",
                                         "exact polar expansion identity");
  v_polar->add_option("--trials", trials_polar);
  v_polar->add_option("--seed", seed);
  auto* v_bertini =
      verify->add_subcommand("bertini", "cone points give lines on V");
  v_bertini->add_option("--trials", trials_bertini);
  v_bertini->add_option("--seed", seed);
  for (auto* v : {v_polar, v_bertini})
    v->add_option("--format", fmt_verify)
        ->check(CLI::IsMember({"text", "json"}));

  // ---- audit -----------------------------------------------------------------
  auto* audit = app.add_subcommand("audit", "Proof-ledger audits");
  audit->require_subcommand(1);
  std::string case_id;
  std::string fmt_audit = "text";
  auto* a_ledger = audit->add_subcommand("ledger", "audit one proof case");
  a_ledger->add_option("--case", case_id, "n6, k1..k9, or wolfson")
      ->required();
  a_ledger->add_option("--format", fmt_audit)
      ->check(CLI::IsMember({"text", "json"}));

  // ---- find / tschirnhaus / pipeline ------------------------------------------
  auto* find = app.add_subcommand("find", "Numeric searches");
  find->require_subcommand(1);
  unsigned n_quadrics = 1, plane_k = 1, plane_dim = 3;
  auto* f_plane = find->add_subcommand("plane", "k-plane on random quadrics");
  f_plane->add_option("--quadrics", n_quadrics)->required();
  f_plane->add_option("--k", plane_k)->required();
  f_plane->add_option("--dim", plane_dim)->required();
  f_plane->add_option("--seed", seed);

  auto* tsch = app.add_subcommand("tschirnhaus", "Tschirnhaus systems");
  tsch->require_subcommand(1);
  unsigned tsch_n = 5, tsch_upto = 3;
  auto* t_build = tsch->add_subcommand("build", "build b_1..b_m symbolically");
  t_build->add_option("--n", tsch_n)->required();
  t_build->add_option("--upto", tsch_upto)->required();
  t_build->add_option("--seed", seed);

  auto* pipe = app.add_subcommand("pipeline", "End-to-end rehearsals");
  pipe->require_subcommand(1);
  unsigned pipe_n = 9, pipe_depth = 1;
  auto* p_run = pipe->add_subcommand("run", "tau_123 plane pipeline");
  p_run->add_option("--n", pipe_n)->required();
  p_run->add_option("--depth", pipe_depth)->required();
  p_run->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const json manifest = make_manifest(command, seed);
  try {
    if (*b_g) {
      std::cout << dec(G(arg_m).value) << "\n";
    } else if (*b_f) {
      std::cout << dec(F(arg_m).value) << "\n";
    } else if (*b_theta) {
      std::cout << dec(theta(arg_d, Natural(arg_k))) << "\n";
    } else if (*b_phi) {
      ValueWithSource v = phi(arg_d, Natural(arg_k));
      std::cout << dec(v.value) << "\n";
    } else if (*b_psi) {
      std::vector<Natural> v = psi(arg_d, Natural(arg_k));
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << dec(v[i]);
      std::cout << "\n";
    } else if (*b_dims) {
      Natural r(arg_r);
      std::cout << "dim_param_hyp=" << dec(dim_param_hyp(arg_d, r)) << "\n"
                << "dim_moduli_hyp=" << dec(dim_moduli_hyp(arg_d, r)) << "\n"
                << "dim_param_chain=" << dec(dim_param_chain(arg_d, r)) << "\n"
                << "dim_moduli_chain=" << dec(dim_moduli_chain(arg_d, r))
                << "\n";
    } else if (*b_t1) {
      emit_table(bounds_table(from1, to1), format1, manifest);
    } else if (*b_t2) {
      emit_table(bounds_table(from2, to2), format2, manifest);
    } else if (*c_ident) {
      return run_check_identities(max_ident, fmt_check, manifest);
    } else if (*c_analytic) {
      return emit_report(analytic_inequality_suite(), "analytic", fmt_check,
                         manifest);
    } else if (*c_mono) {
      return run_check_monotone(max_mono, fmt_check, manifest);
    } else if (*c_cmp) {
      return run_check_comparison(max_cmp, fmt_check, manifest);
    } else if (*v_polar) {
      return run_verify_polar_identity(trials_polar, seed, fmt_verify,
                                       manifest);
    } else if (*v_bertini) {
      return run_verify_bertini(trials_bertini, seed, fmt_verify, manifest);
    } else if (*a_ledger) {
      return run_audit(case_id, fmt_audit, manifest);
    } else if (*f_plane) {
      return run_find_plane(n_quadrics, plane_k, plane_dim, seed);
    } else if (*t_build) {
      return run_tschirnhaus(tsch_n, tsch_upto, seed);
    } else if (*p_run) {
      return run_pipeline_cmd(pipe_n, pipe_depth, seed);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
