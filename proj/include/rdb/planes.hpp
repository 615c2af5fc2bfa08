// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// k-planes on intersections of quadrics by the iterated polar cone
// induction, and end-to-end numeric rehearsals of the tau_{1,2,3}
// constructions: a line for n = 9 (depth 1) and a plane for n = 19
// (depth 2).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdb/exact.hpp"
#include "rdb/fields.hpp"
#include "rdb/hpoly.hpp"
#include "rdb/polar.hpp"
#include "rdb/solve.hpp"
#include "rdb/tschirnhaus.hpp"

namespace rdb {

// Finds a k-polar point (P_0,...,P_k) on an intersection of at most three
// quadrics in P^r with r >= (k+1)*l + k, following the induction: find P_0
// (or adopt the supplied base point), extend the system with the tangent
// hyperplanes at the latest point, and find the next point off the span of
// its predecessors.  Every point-find solves a system of degree <= 2^l.
// The spanned plane is verified against all quadrics before returning.
inline std::vector<PPoint<Complex>> quadric_k_plane(
    const HSystem<Complex>& quadrics, unsigned k,
    const std::optional<PPoint<Complex>>& base, const SliceConfig& cfg) {
  const unsigned l = static_cast<unsigned>(quadrics.polys.size());
  if (l == 0 || l > 3)
    throw DomainError("quadric_k_plane: need 1..3 quadrics");
  for (const auto& f : quadrics.polys) {
    if (f.degree() != 2)
      throw DomainError("quadric_k_plane: generators must be quadrics");
  }
  if (k > 5) throw DomainError("quadric_k_plane: k exceeds desk scale");
  if (quadrics.r < (k + 1) * l + k)
    throw DomainError("quadric_k_plane: dimension precondition");

  std::vector<PPoint<Complex>> pts;
  HSystem<Complex> sys = quadrics;
  for (unsigned j = 0; j <= k; ++j) {
    std::optional<PPoint<Complex>> next;
    if (j == 0 && base) {
      if (!quadrics.contains(base->coords(), 1e-6))
        throw DomainError("quadric_k_plane: base point not on the quadrics");
      next = *base;
    } else {
      // Retry with shifted seeds if the solver lands inside the span of the
      // previous points (measure zero for random slices, but possible).
      for (std::uint64_t bump = 0; bump < 5 && !next; ++bump) {
        SliceConfig c = cfg;
        c.seed = cfg.seed + 1000003ULL * j + bump;
        PPoint<Complex> cand = find_point(sys, c);
        std::vector<PPoint<Complex>> trial = pts;
        trial.push_back(cand);
        if (!detail::in_span_of_predecessors(trial)) next = cand;
      }
      if (!next)
        throw DomainError("quadric_k_plane: convergence failure at step " +
                          std::to_string(j));
    }
    pts.push_back(*next);
    if (j == k) break;
    // Tangent hyperplanes of every quadric at the new point extend the
    // iterated cone system.
    for (const auto& f : quadrics.polys)
      sys.polys.push_back(polar(f, next->coords(), 1));
  }
  if (!contains_plane(quadrics, pts, 1e-6))
    throw DomainError("quadric_k_plane: plane certification failed");
  return pts;
}

struct PipelineStage {
  std::string name;
  unsigned long solve_degree = 0;  // product of nonlinear generator degrees
  double residual = 0.0;
};

struct PipelineReport {
  unsigned n = 0;
  unsigned depth = 0;
  std::uint64_t seed = 0;
  std::vector<PipelineStage> stages;
  std::vector<PPoint<Complex>> plane_points;
  double plane_residual = 0.0;
  bool certified = false;
};

namespace detail {

inline unsigned long nonlinear_degree_product(const HSystem<Complex>& V) {
  unsigned long p = 1;
  for (const auto& f : V.polys)
    if (f.degree() > 1) p *= f.degree();
  return p;
}

// Maximum scale-aware coefficient residual of the generators restricted to
// the span of the points (0 when exact containment holds).
inline double plane_residual(const HSystem<Complex>& V,
                             const std::vector<PPoint<Complex>>& pts) {
  double worst = 0.0;
  for (const auto& f : V.polys) {
    const HPoly<Complex> g = restrict_to_span(f, pts);
    double pt_norm = 1.0;
    for (const auto& pt : pts)
      pt_norm = std::max(pt_norm, vec_inf_norm(pt.coords()));
    const double scale =
        1.0 + f.coeff_norm1() * std::pow(pt_norm, f.degree());
    for (const auto& [e, c] : g.terms())
      worst = std::max(worst, std::abs(c) / scale);
  }
  return worst;
}

// Orthonormal basis of the common null space of the degree-1 generators of
// a system, as projective points.
inline std::vector<PPoint<Complex>> hyperplane_nullspace_basis(
    const HSystem<Complex>& V) {
  std::vector<const HPoly<Complex>*> hyps;
  for (const auto& f : V.polys)
    if (f.degree() == 1) hyps.push_back(&f);
  const unsigned r = V.r;
  Eigen::MatrixXcd L(hyps.size(), r + 1);
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    for (unsigned j = 0; j <= r; ++j) {
      std::vector<unsigned> e(r + 1, 0);
      e[j] = 1;
      L(i, j) = hyps[i]->coeff(e);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L, Eigen::ComputeFullV);
  const std::size_t nullity = r + 1 - hyps.size();
  std::vector<PPoint<Complex>> basis;
  for (std::size_t b = 0; b < nullity; ++b) {
    std::vector<Complex> col(r + 1);
    for (unsigned j = 0; j <= r; ++j)
      col[j] = svd.matrixV()(j, r + 1 - nullity + b);
    basis.emplace_back(std::move(col));
  }
  return basis;
}

}  // namespace detail

// Desk-scale numeric rehearsal of the tau_{1,2,3} constructions.  Supported:
// n = 9 with depth 1 (a line) and n = 19 with depth 2 (a plane, the n-6
// argument for n = 19).  Guards: n <= 19, depth <= 2.
inline PipelineReport run_pipeline(unsigned n, unsigned depth,
                                   const SliceConfig& cfg) {
  if (n > 19 || depth > 2)
    throw DomainError("run_pipeline: resource guard (n <= 19, depth <= 2)");
  if (!((n == 9 && depth == 1) || (n == 19 && depth == 2)))
    throw DomainError("run_pipeline: unsupported (n, depth) combination");

  PipelineReport rep;
  rep.n = n;
  rep.depth = depth;
  rep.seed = cfg.seed;

  Rng rng(cfg.seed);
  GeneralPoly<Complex> p{n, rng.complex_vector(n)};
  const auto tsch = build_tschirnhaus(p, 3);
  const HSystem<Complex> V = tau_system_with_hyperplane(tsch);

  // Stage 1: a point of tau_{1,2,3} ∩ H (degree 6: the 2,3 generators).
  SliceConfig c0 = cfg;
  c0.seed = cfg.seed * 2 + 1;
  const PPoint<Complex> P0 = find_point(V, c0);
  rep.stages.push_back({"base point on tau_123",
                        detail::nonlinear_degree_product(V),
                        detail::system_residual(V.polys, P0.coords())});

  // Stage 2: a point of the polar cone C(V; P0), type [3:1 2:2 1:4],
  // degree 12.
  const HSystem<Complex> C1 = cone_system(V, P0, 1e-6);
  SliceConfig c1 = cfg;
  c1.seed = cfg.seed * 2 + 2;
  PPoint<Complex> P1 = find_point(C1, c1);
  for (std::uint64_t bump = 1; bump < 5; ++bump) {
    std::vector<PPoint<Complex>> trial{P0, P1};
    if (!detail::in_span_of_predecessors(trial)) break;
    c1.seed += bump;
    P1 = find_point(C1, c1);
  }
  rep.stages.push_back({"polar cone point",
                        detail::nonlinear_degree_product(C1),
                        detail::system_residual(C1.polys, P1.coords())});

  std::vector<PPoint<Complex>> plane{P0, P1};

  if (depth == 2) {
    // Second polar cone, type [3:1 2:3 1:7]; its hyperplane part cuts P^11.
    const HSystem<Complex> C2 = cone_system(C1, P1, 1e-6);
    const auto basis = detail::hyperplane_nullspace_basis(C2);
    // Restrict the nonlinear generators to that P^11.
    std::vector<HPoly<Complex>> cubic_rest, quads_rest;
    for (const auto& f : C2.polys) {
      if (f.degree() == 1) continue;
      HPoly<Complex> g = restrict_to_span(f, basis);
      (g.degree() == 3 ? cubic_rest : quads_rest).push_back(std::move(g));
    }
    if (quads_rest.empty() || cubic_rest.empty())
      throw DomainError("run_pipeline: unexpected second cone type");
    // A 5-plane on one quadric U inside the P^11 (l = 1, k = 5; quadratic
    // extension steps).
    HSystem<Complex> U;
    U.r = static_cast<unsigned>(basis.size()) - 1;
    U.polys.push_back(quads_rest[0]);
    SliceConfig c2 = cfg;
    c2.seed = cfg.seed * 2 + 3;
    const auto lam = quadric_k_plane(U, 5, std::nullopt, c2);
    for (unsigned s = 0; s < 6; ++s)
      rep.stages.push_back({"quadric 5-plane extension step", 2, 0.0});
    // Restrict the remaining generators (cubic + two quadrics) to the
    // 5-plane Lambda' and find a point there: type [3:1 2:2], degree 12.
    HSystem<Complex> fin;
    fin.r = 5;
    fin.polys.push_back(restrict_to_span(cubic_rest[0], lam));
    for (std::size_t i = 1; i < quads_rest.size(); ++i)
      fin.polys.push_back(restrict_to_span(quads_rest[i], lam));
    SliceConfig c3 = cfg;
    c3.seed = cfg.seed * 2 + 4;
    const PPoint<Complex> u = find_point(fin, c3);
    // Map back: s-coords -> P^11 coords -> ambient P^18.
    std::vector<Complex> w(basis.size(), Complex(0));
    for (std::size_t i = 0; i < lam.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        w[j] += u[i] * lam[i][j];
    std::vector<Complex> x(V.r + 1, Complex(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (unsigned j = 0; j <= V.r; ++j) x[j] += w[i] * basis[i][j];
    PPoint<Complex> P2(x);
    rep.stages.push_back({"final point on restricted cone",
                          detail::nonlinear_degree_product(fin),
                          detail::system_residual(C2.polys, P2.coords())});
    std::vector<PPoint<Complex>> trial{P0, P1, P2};
    if (detail::in_span_of_predecessors(trial))
      throw DomainError("run_pipeline: degenerate final point");
    plane.push_back(P2);
  }

  rep.plane_points = plane;
  rep.plane_residual = detail::plane_residual(V, plane);
  rep.certified = contains_plane(V, plane, 1e-6);
  if (!rep.certified)
    throw DomainError("run_pipeline: plane certification failed at stage " +
                      std::to_string(rep.stages.size()));
  return rep;
}

}  // namespace rdb
