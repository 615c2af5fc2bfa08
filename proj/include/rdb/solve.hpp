// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Numeric point finding on intersections of hypersurfaces: slice with
// seeded random hyperplanes to expected dimension zero, eliminate the
// linear generators exactly, solve the residual system (at most three
// projective variables) by nested Sylvester resultants with a random
// linear change of variables, then refine on the full system by
// Gauss-Newton.  Everything is deterministic in the seed.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rdb/exact.hpp"
#include "rdb/fields.hpp"
#include "rdb/hpoly.hpp"
#include "rdb/polar.hpp"
#include "rdb/rng.hpp"

namespace rdb {

struct SliceConfig {
  std::uint64_t seed = 0;
  double residual_tol = 1e-8;
  unsigned newton_iters = 40;
};

namespace detail {

// ---- univariate machinery ------------------------------------------------

// Trims negligible leading coefficients (relative threshold).
inline std::vector<Complex> trim_poly(std::vector<Complex> c,
                                      double rel = 1e-12) {
  double mx = 0.0;
  for (const Complex& v : c) mx = std::max(mx, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= rel * mx) c.pop_back();
  return c;
}

inline Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

// Roots of c[0] + c[1] z + ... via the companion-matrix eigenvalues,
// polished by a few Newton steps on the polynomial itself.
inline std::vector<Complex> univariate_roots(std::vector<Complex> c) {
  c = trim_poly(c);
  if (c.size() <= 1) return {};
  const std::size_t n = c.size() - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<Complex> roots(n);
  std::vector<Complex> dc(n);
  for (std::size_t i = 1; i <= n; ++i) dc[i - 1] = c[i] * double(i);
  for (std::size_t i = 0; i < n; ++i) {
    Complex z = es.eigenvalues()(static_cast<Eigen::Index>(i));
    for (int it = 0; it < 12; ++it) {
      const Complex d = horner(dc, z);
      if (std::abs(d) < 1e-300) break;
      z -= horner(c, z) / d;
    }
    roots[i] = z;
  }
  return roots;
}

// Resultant of two univariate polynomials as the Sylvester determinant.
inline Complex resultant_scalar(std::vector<Complex> a,
                                std::vector<Complex> b) {
  a = trim_poly(a);
  b = trim_poly(b);
  if (a.empty() || b.empty()) return Complex(0);
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  if (da == 0 && db == 0) return Complex(1);
  if (da == 0) return detail::kpow(a[0], static_cast<unsigned>(db));
  if (db == 0) return detail::kpow(b[0], static_cast<unsigned>(da));
  const std::size_t n = da + db;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) s(i, i + j) = a[da - j];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) s(db + i, i + j) = b[db - j];
  return s.partialPivLu().determinant();
}

// Interpolates a polynomial of degree < pts.size() through samples on the
// given nodes (Vandermonde solve; the nodes are spread on a circle, which
// keeps the system well conditioned).
inline std::vector<Complex> interpolate(const std::vector<Complex>& nodes,
                                        const std::vector<Complex>& values) {
  const std::size_t n = nodes.size();
  Eigen::MatrixXcd v(n, n);
  Eigen::VectorXcd y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex p(1);
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= nodes[i];
    }
    y(i) = values[i];
  }
  Eigen::VectorXcd x = v.partialPivLu().solve(y);
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x(i);
  return out;
}

inline std::vector<Complex> circle_nodes(std::size_t count, Rng& rng) {
  const double rho = 0.8 + 0.6 * rng.unit();
  const double phase = rng.unit() * 2.0 * M_PI;
  std::vector<Complex> nodes(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double th = phase + 2.0 * M_PI * double(j) / double(count);
    nodes[j] = rho * Complex(std::cos(th), std::sin(th));
  }
  return nodes;
}

// ---- small dense affine polynomials --------------------------------------

// Affine (dehomogenized) polynomial in `nvars` variables over C, used only
// for the residual elimination step (nvars <= 3).
struct APoly {
  unsigned nvars = 0;
  std::map<std::vector<unsigned>, Complex> terms;

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Complex evaluate(const std::vector<Complex>& v) const {
    Complex acc(0);
    for (const auto& [e, c] : terms) {
      Complex t = c;
      for (unsigned j = 0; j < nvars; ++j)
        for (unsigned i = 0; i < e[j]; ++i) t *= v[j];
      acc += t;
    }
    return acc;
  }

  double norm1() const {
    double s = 0.0;
    for (const auto& [e, c] : terms) s += std::abs(c);
    return s;
  }

  // Substitutes var 0 with a value, producing a polynomial in nvars-1 vars.
  APoly substitute_front(const Complex& val) const {
    APoly out;
    out.nvars = nvars - 1;
    for (const auto& [e, c] : terms) {
      Complex t = c;
      for (unsigned i = 0; i < e[0]; ++i) t *= val;
      std::vector<unsigned> ne(e.begin() + 1, e.end());
      out.terms[ne] += t;
    }
    return out;
  }

  APoly partial(unsigned j) const {
    APoly out;
    out.nvars = nvars;
    for (const auto& [e, c] : terms) {
      if (e[j] == 0) continue;
      std::vector<unsigned> ne = e;
      ne[j] -= 1;
      out.terms[ne] += c * double(e[j]);
    }
    return out;
  }

  // Substitutes vars 0..nvars-2 and returns the coefficient vector of the
  // resulting univariate polynomial in the last variable.
  std::vector<Complex> uni_coeffs(const std::vector<Complex>& prefix) const {
    unsigned dmax = 0;
    for (const auto& [e, c] : terms) dmax = std::max(dmax, e[nvars - 1]);
    std::vector<Complex> out(dmax + 1, Complex(0));
    for (const auto& [e, c] : terms) {
      Complex t = c;
      for (unsigned j = 0; j + 1 < nvars; ++j)
        for (unsigned i = 0; i < e[j]; ++i) t *= prefix[j];
      out[e[nvars - 1]] += t;
    }
    return out;
  }
};

// Sets the last variable of a homogeneous polynomial to 1.
inline APoly dehomogenize(const HPoly<Complex>& g) {
  APoly out;
  out.nvars = g.nvars() - 1;
  for (const auto& [e, c] : g.terms()) {
    std::vector<unsigned> ne(e.begin(), e.end() - 1);
    out.terms[ne] += c;
  }
  return out;
}

// Square-system Newton polish in the reduced affine variables; cheap and
// well conditioned, it sharpens the coarse resultant candidates before the
// full-system refinement.
inline void polish_affine(const std::vector<APoly>& sys,
                          std::vector<Complex>& u, unsigned iters = 15) {
  const std::size_t q = u.size();
  if (sys.size() != q) return;
  Eigen::MatrixXcd jac(q, q);
  Eigen::VectorXcd rhs(q);
  std::vector<std::vector<APoly>> parts(q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      parts[i].push_back(sys[i].partial(static_cast<unsigned>(j)));
  for (unsigned it = 0; it < iters; ++it) {
    for (std::size_t i = 0; i < q; ++i) {
      rhs(i) = -sys[i].evaluate(u);
      for (std::size_t j = 0; j < q; ++j) jac(i, j) = parts[i][j].evaluate(u);
    }
    if (rhs.norm() < 1e-15) break;
    Eigen::VectorXcd delta = jac.completeOrthogonalDecomposition().solve(rhs);
    const double dn = delta.norm();
    if (dn > 10.0) delta *= 10.0 / dn;
    for (std::size_t j = 0; j < q; ++j) u[j] += delta(j);
  }
}

// ---- residual-system solving (<= 3 affine variables) ----------------------

inline std::vector<std::vector<Complex>> solve_q1(const APoly& f) {
  std::vector<std::vector<Complex>> out;
  for (const Complex& z : univariate_roots(f.uni_coeffs({})))
    out.push_back({z});
  return out;
}

inline std::vector<std::vector<Complex>> solve_q2(const APoly& f,
                                                  const APoly& g, Rng& rng) {
  const std::size_t cnt = std::size_t(f.degree()) * g.degree() + 1;
  const auto nodes = circle_nodes(cnt, rng);
  std::vector<Complex> vals(cnt);
  for (std::size_t j = 0; j < cnt; ++j)
    vals[j] =
        resultant_scalar(f.uni_coeffs({nodes[j]}), g.uni_coeffs({nodes[j]}));
  std::vector<std::vector<Complex>> out;
  for (const Complex& z0 : univariate_roots(interpolate(nodes, vals))) {
    std::vector<Complex> a = f.uni_coeffs({z0});
    std::vector<Complex> b = g.uni_coeffs({z0});
    // Use whichever factor keeps more degree after trimming for the fiber.
    const std::vector<Complex>& fib =
        trim_poly(a).size() >= trim_poly(b).size() ? a : b;
    for (const Complex& z1 : univariate_roots(fib)) out.push_back({z0, z1});
  }
  return out;
}

inline std::vector<std::vector<Complex>> solve_q3(const APoly& f1,
                                                  const APoly& f2,
                                                  const APoly& f3, Rng& rng) {
  const unsigned d1 = f1.degree(), d2 = f2.degree(), d3 = f3.degree();
  const std::size_t cnt = std::size_t(d1) * d2 * d1 * d3 + 1;
  const auto nodes = circle_nodes(cnt, rng);
  const std::size_t inner12 = std::size_t(d1) * d2 + 1;
  const std::size_t inner13 = std::size_t(d1) * d3 + 1;
  const std::size_t inner = std::max(inner12, inner13);
  const auto inner_nodes = circle_nodes(inner, rng);
  std::vector<Complex> vals(cnt);
  for (std::size_t j = 0; j < cnt; ++j) {
    // r12(t, z1) and r13(t, z1) as univariate polynomials in z1, via
    // evaluation over inner nodes and interpolation.
    std::vector<Complex> v12(inner), v13(inner);
    for (std::size_t k = 0; k < inner; ++k) {
      const std::vector<Complex> pre{nodes[j], inner_nodes[k]};
      const auto c1 = f1.uni_coeffs(pre);
      v12[k] = resultant_scalar(c1, f2.uni_coeffs(pre));
      v13[k] = resultant_scalar(c1, f3.uni_coeffs(pre));
    }
    vals[j] = resultant_scalar(interpolate(inner_nodes, v12),
                               interpolate(inner_nodes, v13));
  }
  std::vector<std::vector<Complex>> out;
  for (const Complex& z0 : univariate_roots(interpolate(nodes, vals))) {
    // No residual filtering here: the downstream Newton refinement plus
    // clustering discards spurious fiber combinations more reliably than a
    // tolerance on the coarse resultant roots would.
    const APoly g1 = f1.substitute_front(z0);
    const APoly g2 = f2.substitute_front(z0);
    for (const auto& tail : solve_q2(g1, g2, rng))
      out.push_back({z0, tail[0], tail[1]});
  }
  return out;
}

// ---- Gauss-Newton refinement ----------------------------------------------

// Scale-aware residual of a point on a generator list: max over generators
// of |f(x)| / (1 + |f|_1 |x|_inf^deg f).
inline double system_residual(const std::vector<HPoly<Complex>>& gens,
                              const std::vector<Complex>& x) {
  double worst = 0.0;
  const double xn = vec_inf_norm(x);
  for (const auto& f : gens) {
    const double scale = 1.0 + f.coeff_norm1() * std::pow(xn, f.degree());
    worst = std::max(worst, std::abs(f.evaluate(x)) / scale);
  }
  return worst;
}

// Refines x in place on the full generator list, holding the largest
// coordinate fixed (projective chart).  Returns the final residual.
inline double newton_refine(const std::vector<HPoly<Complex>>& gens,
                            std::vector<Complex>& x, unsigned iters) {
  const std::size_t n = x.size();
  // Normalize and pick the chart.
  std::size_t pivot = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (std::abs(x[j]) > std::abs(x[pivot])) pivot = j;
  if (std::abs(x[pivot]) == 0.0) return 1e300;
  const Complex scale = x[pivot];
  for (auto& c : x) c /= scale;
  // Precompute partial derivatives.
  std::vector<std::vector<HPoly<Complex>>> parts;
  for (const auto& f : gens) {
    std::vector<HPoly<Complex>> row;
    for (std::size_t j = 0; j < n; ++j)
      row.push_back(f.partial(static_cast<unsigned>(j)));
    parts.push_back(std::move(row));
  }
  const std::size_t m = gens.size();
  Eigen::MatrixXcd jac(m, n - 1);
  Eigen::VectorXcd rhs(m);
  for (unsigned it = 0; it < iters; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      rhs(i) = -gens[i].evaluate(x);
      std::size_t col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        jac(i, col++) = parts[i][j].evaluate(x);
      }
    }
    if (rhs.norm() < 1e-15) break;
    Eigen::VectorXcd delta =
        jac.completeOrthogonalDecomposition().solve(rhs);
    // Damp huge steps to keep divergent candidates from overflowing.
    const double dn = delta.norm();
    if (dn > 10.0) delta *= 10.0 / dn;
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot) continue;
      x[j] += delta(col++);
    }
  }
  return system_residual(gens, x);
}

}  // namespace detail

// Finds a point of V by seeded random slicing; see the header comment.
// Throws DomainError if the preconditions fail or no candidate converges
// after 5 reseeded attempts.
inline PPoint<Complex> find_point(const HSystem<Complex>& V,
                                  const SliceConfig& cfg) {
  const unsigned r = V.r;
  const unsigned total = static_cast<unsigned>(V.polys.size());
  if (total > r)
    throw DomainError("find_point: expected dimension negative");
  std::vector<HPoly<Complex>> linear, nonlinear;
  for (const auto& f : V.polys) {
    // Rescale each generator to unit coefficient norm: the variety is
    // unchanged and the downstream numerics stay well conditioned even when
    // restriction has inflated the coefficients by many orders of magnitude.
    const double s = f.coeff_norm1();
    const HPoly<Complex> g = s > 0 ? f.scaled(Complex(1.0 / s)) : f;
    (g.degree() <= 1 ? linear : nonlinear).push_back(g);
  }
  const unsigned q = static_cast<unsigned>(nonlinear.size());
  if (q > 3)
    throw DomainError("find_point: more than 3 non-linear generators");
  unsigned long prod = 1;
  for (const auto& f : nonlinear) prod *= f.degree();
  if (prod > 64) throw DomainError("find_point: degree cap exceeded");

  for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
    try {
    Rng rng(cfg.seed + 0x9e3779b97f4a7c15ULL * attempt);
    // Random slicing hyperplanes down to expected dimension 0.
    const unsigned slices = r - total;
    // Linear equations: linear generators + slices, as rows over C^{r+1}.
    const std::size_t rows = linear.size() + slices;
    Eigen::MatrixXcd L(rows, r + 1);
    std::size_t row = 0;
    for (const auto& f : linear) {
      for (unsigned j = 0; j <= r; ++j) {
        std::vector<unsigned> e(r + 1, 0);
        e[j] = 1;
        L(row, j) = f.coeff(e);
      }
      ++row;
    }
    for (unsigned s = 0; s < slices; ++s, ++row)
      for (unsigned j = 0; j <= r; ++j) L(row, j) = rng.complex_unit();
    // Null space: dimension q + 1 generically.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        L, Eigen::ComputeFullV);
    const unsigned nullity = q + 1;
    if (rows + nullity != r + 1u) continue;  // defensive; cannot happen
    std::vector<PPoint<Complex>> basis;
    bool degenerate = false;
    if (rows > 0 && svd.singularValues()(rows - 1) <= 1e-10) degenerate = true;
    for (unsigned b = 0; b < nullity && !degenerate; ++b) {
      std::vector<Complex> col(r + 1);
      for (unsigned j = 0; j <= r; ++j)
        col[j] = svd.matrixV()(j, r + 1 - nullity + b);
      basis.emplace_back(std::move(col));
    }
    if (degenerate) continue;

    std::vector<std::vector<Complex>> sols;  // in z-coordinates (length q+1)
    if (q == 0) {
      sols.push_back({Complex(1)});
    } else {
      // Restrict the nonlinear generators to the null space, apply a random
      // invertible change of variables, and dehomogenize the last variable.
      std::vector<PPoint<Complex>> change;
      for (unsigned i = 0; i <= q; ++i)
        change.emplace_back(rng.complex_vector(q + 1));
      std::vector<detail::APoly> reduced;
      for (const auto& f : nonlinear) {
        HPoly<Complex> g = restrict_to_span(f, basis);
        g = restrict_to_span(g, change);
        reduced.push_back(detail::dehomogenize(g));
      }
      std::vector<std::vector<Complex>> usols;
      if (q == 1)
        usols = detail::solve_q1(reduced[0]);
      else if (q == 2)
        usols = detail::solve_q2(reduced[0], reduced[1], rng);
      else
        usols = detail::solve_q3(reduced[0], reduced[1], reduced[2], rng);
      for (auto& u : usols) {
        detail::polish_affine(reduced, u);
        u.push_back(Complex(1));
        // Map through the change of variables: z = sum_i u_i * change_i.
        std::vector<Complex> z(q + 1, Complex(0));
        for (unsigned i = 0; i <= q; ++i)
          for (unsigned j = 0; j <= q; ++j) z[j] += u[i] * change[i][j];
        sols.push_back(std::move(z));
      }
    }

    // Candidates in ambient coordinates, refined on the full sliced system
    // (normalized generators keep the Newton steps well scaled).
    std::vector<HPoly<Complex>> full = linear;
    full.insert(full.end(), nonlinear.begin(), nonlinear.end());
    for (std::size_t s = linear.size(); s < rows; ++s) {
      HPoly<Complex> h(r + 1, 1);
      for (unsigned j = 0; j <= r; ++j) {
        std::vector<unsigned> e(r + 1, 0);
        e[j] = 1;
        h.add_term(e, L(s, j));
      }
      full.push_back(std::move(h));
    }
    std::optional<std::vector<Complex>> best;
    double best_res = 1e300;
    for (const auto& z : sols) {
      std::vector<Complex> x(r + 1, Complex(0));
      for (unsigned i = 0; i <= q; ++i)
        for (unsigned j = 0; j <= r; ++j) x[j] += z[i] * basis[i][j];
      const double pre = detail::system_residual(full, x);
      if (!(pre < 1e6)) continue;
      const double res = detail::newton_refine(full, x, cfg.newton_iters);
      if (res < best_res) {
        best_res = res;
        best = x;
      }
    }
    if (best && best_res <= cfg.residual_tol &&
        detail::system_residual(V.polys, *best) <= cfg.residual_tol)
      return PPoint<Complex>(*best);
    } catch (const DomainError&) {
      // Degenerate random data for this attempt; reseed and retry.
    }
  }
  throw DomainError("find_point: no root converged");
}

// All distinct solutions of one seeded slice of V (tolerance-clustered at
// relative distance 1e-6); for generic systems the count equals the degree
// product.
inline std::vector<PPoint<Complex>> sliced_solutions(const HSystem<Complex>& V,
                                                     const SliceConfig& cfg) {
  // Reuse find_point's machinery by running its body for a single attempt
  // and collecting every converged candidate.
  const unsigned r = V.r;
  std::vector<HPoly<Complex>> linear, nonlinear;
  for (const auto& f : V.polys)
    (f.degree() <= 1 ? linear : nonlinear).push_back(f);
  const unsigned q = static_cast<unsigned>(nonlinear.size());
  if (q == 0 || q > 3) throw DomainError("sliced_solutions: need 1..3 nonlinear");
  Rng rng(cfg.seed);
  const unsigned slices = r - static_cast<unsigned>(V.polys.size());
  const std::size_t rows = linear.size() + slices;
  Eigen::MatrixXcd L(rows, r + 1);
  std::size_t row = 0;
  for (const auto& f : linear) {
    for (unsigned j = 0; j <= r; ++j) {
      std::vector<unsigned> e(r + 1, 0);
      e[j] = 1;
      L(row, j) = f.coeff(e);
    }
    ++row;
  }
  for (unsigned s = 0; s < slices; ++s, ++row)
    for (unsigned j = 0; j <= r; ++j) L(row, j) = rng.complex_unit();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L, Eigen::ComputeFullV);
  std::vector<PPoint<Complex>> basis;
  for (unsigned b = 0; b <= q; ++b) {
    std::vector<Complex> col(r + 1);
    for (unsigned j = 0; j <= r; ++j) col[j] = svd.matrixV()(j, r - q + b);
    basis.emplace_back(std::move(col));
  }
  std::vector<PPoint<Complex>> change;
  for (unsigned i = 0; i <= q; ++i)
    change.emplace_back(rng.complex_vector(q + 1));
  std::vector<detail::APoly> reduced;
  for (const auto& f : nonlinear) {
    HPoly<Complex> g = restrict_to_span(f, basis);
    g = restrict_to_span(g, change);
    reduced.push_back(detail::dehomogenize(g));
  }
  std::vector<std::vector<Complex>> usols;
  if (q == 1)
    usols = detail::solve_q1(reduced[0]);
  else if (q == 2)
    usols = detail::solve_q2(reduced[0], reduced[1], rng);
  else
    usols = detail::solve_q3(reduced[0], reduced[1], reduced[2], rng);
  for (auto& u : usols) detail::polish_affine(reduced, u);
  std::vector<HPoly<Complex>> full = V.polys;
  for (std::size_t s = linear.size(); s < rows; ++s) {
    HPoly<Complex> h(r + 1, 1);
    for (unsigned j = 0; j <= r; ++j) {
      std::vector<unsigned> e(r + 1, 0);
      e[j] = 1;
      h.add_term(e, L(s, j));
    }
    full.push_back(std::move(h));
  }
  std::vector<PPoint<Complex>> out;
  for (auto& u : usols) {
    u.push_back(Complex(1));
    std::vector<Complex> z(q + 1, Complex(0));
    for (unsigned i = 0; i <= q; ++i)
      for (unsigned j = 0; j <= q; ++j) z[j] += u[i] * change[i][j];
    std::vector<Complex> x(r + 1, Complex(0));
    for (unsigned i = 0; i <= q; ++i)
      for (unsigned j = 0; j <= r; ++j) x[j] += z[i] * basis[i][j];
    if (detail::newton_refine(full, x, cfg.newton_iters) > cfg.residual_tol)
      continue;
    PPoint<Complex> p(x);
    bool dup = false;
    for (const auto& prev : out) {
      double dist = 0.0;
      for (std::size_t j = 0; j < p.size(); ++j)
        dist = std::max(dist, std::abs(p[j] - prev[j]));
      if (dist <= 1e-6) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rdb
