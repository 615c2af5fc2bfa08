// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// Sparse homogeneous multivariate polynomials over an abstract coefficient
// field, together with the polar operator
//   t(k,f,P)(y) = sum_{|e| = d-k} ((d-k)!/prod_j e_j!) (D^e f)(P) y^e
// (multinomial grouping of the ordered k-th partial derivatives), the
// Technical Lemma identity, and restriction of a form to the span of a
// point list.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rdb/exact.hpp"
#include "rdb/fields.hpp"

namespace rdb {

template <typename K>
class HPoly {
 public:
  using Expo = std::vector<unsigned>;
  using TermMap = std::map<Expo, K>;  // lexicographic exponent order

  HPoly(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0) throw DomainError("HPoly: need at least one variable");
  }

  static HPoly monomial(unsigned nvars, const Expo& e, const K& c) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    HPoly p(nvars, d);
    p.add_term(e, c);
    return p;
  }

  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Expo& e, const K& c) {
    if (e.size() != nvars_) throw DomainError("HPoly: exponent length");
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (d != degree_) throw DomainError("HPoly: term degree mismatch");
    auto it = terms_.find(e);
    // Prune exact zeros only; tolerance decisions belong to the callers.
    if (it == terms_.end()) {
      if (!(c == K(0))) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  K coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  HPoly operator+(const HPoly& o) const {
    require_shape(o);
    HPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
  }

  HPoly operator-() const {
    HPoly out(nvars_, degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  HPoly operator-(const HPoly& o) const { return *this + (-o); }

  HPoly scaled(const K& c) const {
    HPoly out(nvars_, degree_);
    if (c == K(0)) return out;
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
  }

  HPoly operator*(const HPoly& o) const {
    if (o.nvars_ != nvars_) throw DomainError("HPoly: variable count mismatch");
    HPoly out(nvars_, degree_ + o.degree_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Expo e(nvars_);
        for (unsigned j = 0; j < nvars_; ++j) e[j] = ea[j] + eb[j];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  K evaluate(const std::vector<K>& v) const {
    if (v.size() != nvars_) throw DomainError("HPoly: point length mismatch");
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (unsigned j = 0; j < nvars_; ++j) {
        for (unsigned i = 0; i < e[j]; ++i) t *= v[j];
      }
      acc += t;
    }
    return acc;
  }

  HPoly partial(unsigned j) const {
    if (j >= nvars_) throw DomainError("HPoly: partial index out of range");
    HPoly out(nvars_, degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[j] == 0) continue;
      Expo ne = e;
      ne[j] -= 1;
      out.add_term(ne, c * FieldTraits<K>::from_long(static_cast<long>(e[j])));
    }
    return out;
  }

  // 1-norm of the coefficient vector, as a double; used for scale-aware
  // residual tests.
  double coeff_norm1() const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += FieldTraits<K>::abs_approx(c);
    return s;
  }

  bool operator==(const HPoly& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
      auto it = o.terms_.find(e);
      if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  bool operator!=(const HPoly& o) const { return !(*this == o); }

  // Canonical text form: terms in lexicographic exponent order, joined by
  // " + ", each as coeff*x0^a0*...; exponent-1 factors drop the caret,
  // exponent-0 factors are omitted, and a degree-0 term is just the
  // coefficient.
  std::string render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << FieldTraits<K>::render(c);
      for (unsigned j = 0; j < nvars_; ++j) {
        if (e[j] == 0) continue;
        os << "*x" << j;
        if (e[j] > 1) os << "^" << e[j];
      }
    }
    return os.str();
  }

 private:
  void require_shape(const HPoly& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_)
      throw DomainError("HPoly: shape mismatch");
  }

  unsigned nvars_;
  unsigned degree_;
  TermMap terms_;
};

// Parses the canonical text form over exact rationals.  Accepts terms
// separated by '+' at the top level; a term is [coeff][*xN[^E]]*, where the
// coefficient may be a signed p/q rational or omitted (meaning 1, or -1 for
// a bare leading '-').
inline HPoly<Rational> parse_hpoly(const std::string& text, unsigned nvars,
                                   unsigned degree) {
  HPoly<Rational> out(nvars, degree);
  std::size_t pos = 0;
  const std::string& s = text;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  skip_ws();
  if (s.compare(pos, 1, "0") == 0 && pos + 1 == s.size()) return out;
  bool expect_term = true;
  while (pos < s.size()) {
    skip_ws();
    if (!expect_term) {
      if (s[pos] != '+') throw DomainError("parse_hpoly: expected '+'");
      ++pos;
      skip_ws();
    }
    expect_term = false;
    // Read one term up to the next top-level '+'.
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    pos = end;
    // Split the term on '*'.
    std::vector<std::string> factors;
    std::size_t tp = 0;
    while (tp <= term.size()) {
      std::size_t star = term.find('*', tp);
      if (star == std::string::npos) star = term.size();
      std::string tok = term.substr(tp, star - tp);
      // Trim.
      std::size_t b = tok.find_first_not_of(" \t");
      std::size_t f = tok.find_last_not_of(" \t");
      factors.push_back(b == std::string::npos ? std::string()
                                               : tok.substr(b, f - b + 1));
      tp = star + 1;
      if (star == term.size()) break;
    }
    if (factors.empty() || factors.front().empty())
      throw DomainError("parse_hpoly: empty term");
    Rational coeff(1);
    std::size_t fi = 0;
    std::string head = factors[0];
    if (head[0] != 'x') {
      if (head == "-") {
        coeff = Rational(-1);
        fi = 1;
      } else if (head[0] == '-' && head.size() > 1 && head[1] == 'x') {
        coeff = Rational(-1);
        factors[0] = head.substr(1);
      } else {
        try {
          coeff = Rational(head);
        } catch (const std::exception&) {
          throw DomainError("parse_hpoly: bad coefficient '" + head + "'");
        }
        coeff.canonicalize();
        fi = 1;
      }
    }
    std::vector<unsigned> e(nvars, 0);
    for (; fi < factors.size(); ++fi) {
      const std::string& tok = factors[fi];
      if (tok.empty() || tok[0] != 'x')
        throw DomainError("parse_hpoly: bad factor '" + tok + "'");
      std::size_t caret = tok.find('^');
      unsigned idx =
          static_cast<unsigned>(std::stoul(tok.substr(1, caret - 1)));
      unsigned ex = 1;
      if (caret != std::string::npos)
        ex = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      if (idx >= nvars) throw DomainError("parse_hpoly: variable index");
      e[idx] += ex;
    }
    out.add_term(e, coeff);
    skip_ws();
  }
  return out;
}

// A point of projective space with a canonical representative: the first
// coordinate whose magnitude is non-negligible is scaled to 1.
template <typename K>
class PPoint {
 public:
  explicit PPoint(std::vector<K> v) : coords_(std::move(v)) {
    if (coords_.empty()) throw DomainError("PPoint: empty coordinates");
    double mx = 0.0;
    for (const K& c : coords_) mx = std::max(mx, FieldTraits<K>::abs_approx(c));
    std::size_t pivot = coords_.size();
    for (std::size_t j = 0; j < coords_.size(); ++j) {
      const K& c = coords_[j];
      bool nonzero = FieldTraits<K>::exact
                         ? !FieldTraits<K>::is_zero(c)
                         : FieldTraits<K>::abs_approx(c) > 1e-12 * mx;
      if (nonzero) {
        pivot = j;
        break;
      }
    }
    if (pivot == coords_.size()) throw DomainError("PPoint: zero point");
    const K scale = coords_[pivot];
    for (K& c : coords_) c = c / scale;
    coords_[pivot] = K(1);
  }

  const std::vector<K>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const K& operator[](std::size_t j) const { return coords_[j]; }

  bool operator==(const PPoint& o) const { return coords_ == o.coords_; }

 private:
  std::vector<K> coords_;
};

namespace detail {

// Enumerates exponent vectors e <= a with |e| = target, invoking fn(e).
template <typename Fn>
void enumerate_sub_exponents(const std::vector<unsigned>& a, unsigned target,
                             std::vector<unsigned>& e, std::size_t j,
                             unsigned remaining, Fn&& fn) {
  if (j == a.size()) {
    if (remaining == 0) fn(e);
    return;
  }
  const unsigned hi = std::min(a[j], remaining);
  for (unsigned v = 0; v <= hi; ++v) {
    e[j] = v;
    enumerate_sub_exponents(a, target, e, j + 1, remaining - v,
                            std::forward<Fn>(fn));
  }
  e[j] = 0;
}

template <typename K>
K kpow(const K& base, unsigned e) {
  K acc(1);
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace detail

template <typename K>
double vec_inf_norm(const std::vector<K>& v) {
  double mx = 0.0;
  for (const K& c : v) mx = std::max(mx, FieldTraits<K>::abs_approx(c));
  return mx;
}

// Scale-aware vanishing test: |f(v)| <= tol * (1 + |f|_1 * |v|_inf^deg f);
// exact over the rationals.
template <typename K>
bool vanishes_at(const HPoly<K>& f, const std::vector<K>& v,
                 double tol = kZeroTol) {
  const K val = f.evaluate(v);
  if constexpr (FieldTraits<K>::exact) {
    return FieldTraits<K>::is_zero(val);
  } else {
    const double scale =
        f.coeff_norm1() * std::pow(vec_inf_norm(v), f.degree());
    return FieldTraits<K>::is_zero(val, scale, tol);
  }
}

// The k-th polar of f at the representative p: a homogeneous polynomial of
// degree d-k in fresh variables (identified with the x's), with coefficient
// ((d-k)!/prod e_j!) * (D^e f)(p) on y^e.  For k = 0 this is d! * f; for
// k = d it is the constant f(p).
template <typename K>
HPoly<K> polar(const HPoly<K>& f, const std::vector<K>& p, unsigned k) {
  if (p.size() != f.nvars()) throw DomainError("polar: point length mismatch");
  if (k > f.degree()) throw DomainError("polar: k out of range");
  const unsigned d = f.degree();
  const unsigned dk = d - k;
  HPoly<K> out(f.nvars(), dk);
  const Natural dk_fact = factorial(dk);
  std::vector<unsigned> e(f.nvars(), 0);
  for (const auto& [a, c] : f.terms()) {
    detail::enumerate_sub_exponents(
        a, dk, e, 0, dk, [&](const std::vector<unsigned>& ee) {
          // Integer factor: multinomial (d-k)!/prod e_j! times the falling
          // factorials from differentiating x^a e_j times per variable.
          Natural factor = dk_fact;
          for (std::size_t j = 0; j < ee.size(); ++j) {
            factor /= factorial(ee[j]);
            factor *= factorial_ratio(Natural(a[j]), Natural(a[j] - ee[j]));
          }
          K term = c * FieldTraits<K>::from_natural(factor);
          for (std::size_t j = 0; j < ee.size(); ++j)
            term *= detail::kpow(p[j], a[j] - ee[j]);
          out.add_term(ee, term);
        });
  }
  return out;
}

template <typename K>
HPoly<K> polar(const HPoly<K>& f, const PPoint<K>& p, unsigned k) {
  return polar(f, p.coords(), k);
}

// Verifies the Technical Lemma identity
//   f(lambda vP + mu vQ)
//     = f(lambda vP) + f(mu vQ)
//       + sum_{k=1}^{d-1} (1/k!) t(d-k, f, lambda vP)(mu vQ)
// for affine-normalized P, Q (first coordinate 1); the left side is
// evaluated at the vector sum, whose first coordinate is lambda + mu.
// Exact over the rationals.
template <typename K>
bool technical_identity_check(const HPoly<K>& f, const PPoint<K>& P,
                              const PPoint<K>& Q, const K& lambda,
                              const K& mu) {
  if (P.size() != f.nvars() || Q.size() != f.nvars())
    throw DomainError("technical_identity_check: point length mismatch");
  auto check_affine = [](const PPoint<K>& pt) {
    const K delta = pt[0] - K(1);
    if (!FieldTraits<K>::is_zero(delta, 1.0, 1e-12))
      throw DomainError("technical_identity_check: normalization failure");
  };
  check_affine(P);
  check_affine(Q);
  const unsigned d = f.degree();
  const unsigned n = f.nvars();
  std::vector<K> lp(n), mq(n), r(n);
  for (unsigned j = 0; j < n; ++j) {
    lp[j] = lambda * P[j];
    mq[j] = mu * Q[j];
    r[j] = lp[j] + mq[j];
  }
  K lhs = f.evaluate(r);
  K rhs = f.evaluate(lp) + f.evaluate(mq);
  for (unsigned k = 1; k < d; ++k) {
    const HPoly<K> t = polar(f, lp, d - k);
    rhs += t.evaluate(mq) *
           FieldTraits<K>::inv_long(static_cast<long>(factorial(k).get_ui()));
  }
  const K diff = lhs - rhs;
  if constexpr (FieldTraits<K>::exact) {
    return FieldTraits<K>::is_zero(diff);
  } else {
    const double scale =
        f.coeff_norm1() * std::pow(std::max(vec_inf_norm(r), 1.0), d);
    return FieldTraits<K>::is_zero(diff, scale, 1e-8);
  }
}

namespace detail {

// Row rank by Gaussian elimination; exact over the rationals, magnitude
// pivoting with a relative threshold over complex doubles.
template <typename K>
std::size_t matrix_rank(std::vector<std::vector<K>> m, double rel_tol = 1e-10) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  double mx = 0.0;
  for (const auto& row : m)
    for (const K& c : row) mx = std::max(mx, FieldTraits<K>::abs_approx(c));
  if (mx == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    double best = 0.0;
    for (std::size_t i = rank; i < rows; ++i) {
      const double a = FieldTraits<K>::abs_approx(m[i][col]);
      bool nonzero = FieldTraits<K>::exact ? !FieldTraits<K>::is_zero(m[i][col])
                                           : a > rel_tol * mx;
      if (nonzero && a > best) {
        best = a;
        pivot = i;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const K factor = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Restricts f to the span of the given points: substitutes
// x_j = sum_i s_i * vP_i[j] and returns a homogeneous polynomial of the
// same degree in parameters s_0..s_k.  The spanned plane lies on V(f) iff
// the result is identically zero.
template <typename K>
HPoly<K> restrict_to_span(const HPoly<K>& f,
                          const std::vector<PPoint<K>>& points) {
  if (points.empty()) throw DomainError("restrict_to_span: no points");
  const unsigned n = f.nvars();
  const unsigned k1 = static_cast<unsigned>(points.size());
  std::vector<std::vector<K>> rows;
  for (const auto& pt : points) {
    if (pt.size() != n)
      throw DomainError("restrict_to_span: point length mismatch");
    rows.push_back(pt.coords());
  }
  if (detail::matrix_rank(rows) != points.size())
    throw DomainError("restrict_to_span: dependent points");
  // Linear forms L_j(s) = sum_i s_i * P_i[j].
  std::vector<HPoly<K>> linear;
  linear.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    HPoly<K> L(k1, 1);
    for (unsigned i = 0; i < k1; ++i) {
      std::vector<unsigned> e(k1, 0);
      e[i] = 1;
      L.add_term(e, points[i][j]);
    }
    linear.push_back(std::move(L));
  }
  HPoly<K> out(k1, f.degree());
  for (const auto& [a, c] : f.terms()) {
    HPoly<K> prod = HPoly<K>::monomial(k1, std::vector<unsigned>(k1, 0), c);
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = 0; i < a[j]; ++i) prod = prod * linear[j];
    }
    out = out + prod;
  }
  return out;
}

}  // namespace rdb
