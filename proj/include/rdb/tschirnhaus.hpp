// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Tschirnhaus transformations.  For a monic degree-n polynomial p with
// companion matrix M, a transformation w = (w_0,...,w_{n-1}) sends each
// root z to sum_j w_j z^j; the coefficients b_m(w) of the transformed
// polynomial are obtained from the power traces of W(w) = sum_j w_j M^j
// via the Newton identities, and are homogeneous of degree m in w.  The
// hypersurfaces tau_m = V(b_m) live in P^{n-1} minus the excluded point
// [1:0:...:0] (the constant transformation).
#pragma once

#include <cstddef>
#include <vector>

#include "rdb/exact.hpp"
#include "rdb/fields.hpp"
#include "rdb/hpoly.hpp"
#include "rdb/polar.hpp"

namespace rdb {

// Monic polynomial z^n + a_1 z^{n-1} + ... + a_n; a[j] stores a_{j+1}.
template <typename K>
struct GeneralPoly {
  unsigned n = 0;
  std::vector<K> a;
};

// Companion matrix with 1's on the subdiagonal and -a_n..-a_1 down the last
// column, so that for p = z^2 + a_1 z + a_2 it is [[0, -a_2], [1, -a_1]].
template <typename K>
std::vector<std::vector<K>> companion_matrix(const GeneralPoly<K>& p) {
  if (p.n < 2) throw DomainError("companion_matrix: need degree >= 2");
  if (p.a.size() != p.n) throw DomainError("companion_matrix: coefficient count");
  const unsigned n = p.n;
  std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
  for (unsigned i = 0; i + 1 < n; ++i) m[i + 1][i] = K(1);
  for (unsigned i = 0; i < n; ++i) m[i][n - 1] = -p.a[n - 1 - i];
  return m;
}

template <typename K>
struct TschirnhausResult {
  unsigned n = 0;
  unsigned m_max = 0;
  // b[m-1] is b_m: homogeneous of degree m in w_0..w_{n-1}.
  std::vector<HPoly<K>> b;
};

namespace detail {

template <typename K>
using PolyMatrix = std::vector<std::vector<HPoly<K>>>;

template <typename K>
PolyMatrix<K> poly_mat_mul(const PolyMatrix<K>& A, const PolyMatrix<K>& B) {
  const std::size_t n = A.size();
  const unsigned nv = A[0][0].nvars();
  const unsigned deg = A[0][0].degree() + B[0][0].degree();
  PolyMatrix<K> C(n, std::vector<HPoly<K>>(n, HPoly<K>(nv, deg)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] = C[i][j] + A[i][k] * B[k][j];
      }
    }
  }
  return C;
}

// trace(A * B) without materializing the product.
template <typename K>
HPoly<K> poly_mat_trace_product(const PolyMatrix<K>& A, const PolyMatrix<K>& B) {
  const std::size_t n = A.size();
  const unsigned nv = A[0][0].nvars();
  HPoly<K> t(nv, A[0][0].degree() + B[0][0].degree());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (A[i][j].is_zero() || B[j][i].is_zero()) continue;
      t = t + A[i][j] * B[j][i];
    }
  }
  return t;
}

}  // namespace detail

// Computes b_1..b_{m_max} symbolically.  The default guard m_max <=
// min(n, 4) keeps the symbolic matrix powers small for large n; pass
// allow_large = true to lift it (m_max <= n always).
template <typename K>
TschirnhausResult<K> build_tschirnhaus(const GeneralPoly<K>& p, unsigned m_max,
                                       bool allow_large = false) {
  const unsigned n = p.n;
  if (n < 2) throw DomainError("build_tschirnhaus: need degree >= 2");
  if (m_max < 1 || m_max > n)
    throw DomainError("build_tschirnhaus: m_max out of range");
  if (!allow_large && m_max > std::min(n, 4u))
    throw DomainError("build_tschirnhaus: m_max exceeds guard min(n, 4)");

  // Scalar powers M^0..M^{n-1} of the companion matrix.
  const auto M = companion_matrix(p);
  std::vector<std::vector<std::vector<K>>> mpow;
  std::vector<std::vector<K>> id(n, std::vector<K>(n, K(0)));
  for (unsigned i = 0; i < n; ++i) id[i][i] = K(1);
  mpow.push_back(id);
  for (unsigned t = 1; t < n; ++t) {
    std::vector<std::vector<K>> nx(n, std::vector<K>(n, K(0)));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned j = 0; j < n; ++j) nx[i][j] += mpow[t - 1][i][k] * M[k][j];
    mpow.push_back(std::move(nx));
  }

  // W(w) = sum_t w_t M^t, entries linear in w_0..w_{n-1}.
  detail::PolyMatrix<K> W(n, std::vector<HPoly<K>>(n, HPoly<K>(n, 1)));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned t = 0; t < n; ++t) {
        if (mpow[t][i][j] == K(0)) continue;
        std::vector<unsigned> e(n, 0);
        e[t] = 1;
        W[i][j].add_term(e, mpow[t][i][j]);
      }
    }
  }

  // Power traces p_k = tr(W^k), computed from half powers: materialize
  // W^1..W^h with h = ceil(m_max/2) and pair them.
  const unsigned h = (m_max + 1) / 2;
  std::vector<detail::PolyMatrix<K>> wpow{W};
  for (unsigned t = 2; t <= h; ++t)
    wpow.push_back(detail::poly_mat_mul(wpow.back(), W));
  std::vector<HPoly<K>> ps;  // ps[k-1] = p_k
  for (unsigned k = 1; k <= m_max; ++k) {
    if (k == 1) {
      HPoly<K> t(n, 1);
      for (unsigned i = 0; i < n; ++i) t = t + W[i][i];
      ps.push_back(std::move(t));
    } else {
      const unsigned i = k / 2, j = k - k / 2;
      ps.push_back(detail::poly_mat_trace_product(wpow[i - 1], wpow[j - 1]));
    }
  }

  // Newton identities: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i, then
  // b_m = (-1)^m e_m.
  std::vector<HPoly<K>> e;  // e[k-1] = e_k
  TschirnhausResult<K> out;
  out.n = n;
  out.m_max = m_max;
  for (unsigned k = 1; k <= m_max; ++k) {
    HPoly<K> acc(n, k);
    for (unsigned i = 1; i <= k; ++i) {
      HPoly<K> term =
          (i == k) ? ps[i - 1] : e[k - i - 1] * ps[i - 1];
      if (i % 2 == 0) term = -term;
      acc = acc + term;
    }
    acc = acc.scaled(FieldTraits<K>::inv_long(static_cast<long>(k)));
    e.push_back(acc);
    out.b.push_back(k % 2 == 0 ? acc : -acc);
  }
  return out;
}

// Membership of a transformation w in tau_{1..m_max} = V(b_1,...,b_{m_max}),
// guarding against the excluded point [1:0:...:0] (and the zero vector).
template <typename K>
bool tau_point_check(const TschirnhausResult<K>& tsch, const std::vector<K>& w,
                     double tol = kZeroTol) {
  if (w.size() != tsch.n) throw DomainError("tau_point_check: length mismatch");
  double mx = 0.0;
  for (const K& c : w) mx = std::max(mx, FieldTraits<K>::abs_approx(c));
  if (mx == 0.0) throw DomainError("tau_point_check: zero vector");
  bool excluded = true;
  for (std::size_t j = 1; j < w.size(); ++j) {
    const bool zero_j = FieldTraits<K>::exact
                            ? FieldTraits<K>::is_zero(w[j])
                            : FieldTraits<K>::abs_approx(w[j]) <= 1e-12 * mx;
    if (!zero_j) {
      excluded = false;
      break;
    }
  }
  if (excluded) throw DomainError("tau_point_check: excluded point [1:0:...:0]");
  for (const auto& bm : tsch.b) {
    if (!vanishes_at(bm, w, tol)) return false;
  }
  return true;
}

// The system tau_{1,...,m_max} intersected with the hyperplane H = V(w_0),
// which avoids the excluded point; generators ordered H first is not
// required, we keep b's first then H.
template <typename K>
HSystem<K> tau_system_with_hyperplane(const TschirnhausResult<K>& tsch) {
  HSystem<K> V;
  V.r = tsch.n - 1;
  for (const auto& bm : tsch.b) V.polys.push_back(bm);
  HPoly<K> h(tsch.n, 1);
  std::vector<unsigned> e(tsch.n, 0);
  e[0] = 1;
  h.add_term(e, K(1));
  V.polys.push_back(h);
  return V;
}

}  // namespace rdb
