// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Polar cones of intersections of hypersurfaces, iterated cones, k-polar
// points, and plane-containment tests.  Cones are represented by generator
// systems; membership always means vanishing of every generator.
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rdb/exact.hpp"
#include "rdb/fields.hpp"
#include "rdb/hpoly.hpp"
#include "rdb/itype.hpp"

namespace rdb {

// Smallest-singular-value threshold for the numeric "not in span"
// non-degeneracy test on the stacked (normalized) coordinate matrix.
inline constexpr double kSpanTol = 1e-7;

template <typename K>
struct HSystem {
  unsigned r = 0;  // ambient projective dimension; polys live in x_0..x_r
  std::vector<HPoly<K>> polys;

  IntersectionType type() const {
    std::map<unsigned, Natural> counts;
    for (const auto& f : polys) counts[f.degree()] += 1;
    return IntersectionType(counts);
  }

  bool contains(const std::vector<K>& v, double tol = kZeroTol) const {
    for (const auto& f : polys) {
      if (!vanishes_at(f, v, tol)) return false;
    }
    return true;
  }
};

// The system cutting out the polar cone C(V;P): for each generator f_i, the
// polars t(k, f_i, P) for 0 <= k <= deg f_i - 1, in the x-variables.
template <typename K>
HSystem<K> cone_system(const HSystem<K>& V, const PPoint<K>& P,
                       double tol = kZeroTol) {
  if (P.size() != static_cast<std::size_t>(V.r) + 1)
    throw DomainError("cone_system: point length mismatch");
  if (!V.contains(P.coords(), tol)) throw DomainError("P not on V");
  HSystem<K> out;
  out.r = V.r;
  for (const auto& f : V.polys) {
    for (unsigned k = 0; k < f.degree(); ++k)
      out.polys.push_back(polar(f, P.coords(), k));
  }
  return out;
}

namespace detail {

// True iff the last point is in the span of the preceding ones.  Exact rank
// over the rationals; smallest singular value of the row-normalized stacked
// matrix over complex doubles.
template <typename K>
bool in_span_of_predecessors(const std::vector<PPoint<K>>& pts) {
  if (pts.size() <= 1) return false;
  if constexpr (FieldTraits<K>::exact) {
    std::vector<std::vector<K>> without;
    std::vector<std::vector<K>> with;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      without.push_back(pts[i].coords());
      with.push_back(pts[i].coords());
    }
    with.push_back(pts.back().coords());
    return matrix_rank(with) == matrix_rank(without);
  } else {
    const std::size_t rows = pts.size();
    const std::size_t cols = pts[0].size();
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      double norm = 0.0;
      for (std::size_t j = 0; j < cols; ++j)
        norm += std::norm(pts[i][j]);
      norm = std::sqrt(norm);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = pts[i][j] / norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(rows - 1) <= kSpanTol;
  }
}

}  // namespace detail

enum class ChainStatus { certified, membership_failure, span_degeneracy };

inline const char* chain_status_name(ChainStatus s) {
  switch (s) {
    case ChainStatus::certified: return "certified";
    case ChainStatus::membership_failure: return "membership_failure";
    default: return "span_degeneracy";
  }
}

struct ChainError : DomainError {
  ChainError(std::size_t step, ChainStatus status)
      : DomainError(std::string(chain_status_name(status)) + " at step " +
                    std::to_string(step)),
        step(step),
        status(status) {}
  std::size_t step;
  ChainStatus status;
};

// A certified iterated polar cone chain: systems[l] cuts out C^l(V; P_0..
// P_{l-1}), with systems[0] = V itself.
template <typename K>
struct PolarChain {
  HSystem<K> base;
  std::vector<PPoint<K>> points;
  std::vector<HSystem<K>> systems;
};

// Builds C^j(V; points) step by step, certifying at step l that P_l lies on
// the current system and outside the span of its predecessors.  Failures
// report the offending step.
template <typename K>
PolarChain<K> iterated_cone(const HSystem<K>& V,
                            const std::vector<PPoint<K>>& points,
                            double tol = kZeroTol) {
  PolarChain<K> chain;
  chain.base = V;
  chain.systems.push_back(V);
  for (std::size_t l = 0; l < points.size(); ++l) {
    const PPoint<K>& P = points[l];
    if (!chain.systems.back().contains(P.coords(), tol))
      throw ChainError(l, ChainStatus::membership_failure);
    chain.points.push_back(P);
    if (detail::in_span_of_predecessors(chain.points))
      throw ChainError(l, ChainStatus::span_degeneracy);
    chain.systems.push_back(cone_system(chain.systems.back(), P, tol));
  }
  return chain;
}

template <typename K>
bool is_k_polar_point(const HSystem<K>& V, const std::vector<PPoint<K>>& points,
                      double tol = kZeroTol) {
  try {
    iterated_cone(V, points, tol);
    return true;
  } catch (const ChainError&) {
    return false;
  }
}

// True iff the plane spanned by the points lies on V: the restriction of
// every generator to the span is identically zero (exact over the
// rationals, coefficients below a scale-aware tolerance over complex
// doubles).
template <typename K>
bool contains_plane(const HSystem<K>& V, const std::vector<PPoint<K>>& points,
                    double tol = 1e-6) {
  for (const auto& f : V.polys) {
    const HPoly<K> g = restrict_to_span(f, points);
    if constexpr (FieldTraits<K>::exact) {
      if (!g.is_zero()) return false;
    } else {
      double pt_norm = 1.0;
      for (const auto& pt : points)
        pt_norm = std::max(pt_norm, vec_inf_norm(pt.coords()));
      const double scale = f.coeff_norm1() * std::pow(pt_norm, f.degree());
      for (const auto& [e, c] : g.terms()) {
        if (!FieldTraits<K>::is_zero(c, scale, tol)) return false;
      }
    }
  }
  return true;
}

}  // namespace rdb
