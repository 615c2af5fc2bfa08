// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.
//
// IntersectionType: the multiset of degrees [d:l_d ... 1:l_1] of an
// intersection of hypersurfaces, plus the polar-cone type arithmetic.
#pragma once

#include <map>
#include <sstream>
#include <string>

#include "rdb/exact.hpp"

namespace rdb {

class IntersectionType {
 public:
  IntersectionType() = default;
  explicit IntersectionType(std::map<unsigned, Natural> counts)
      : counts_(std::move(counts)) {
    prune();
  }

  static IntersectionType chain(unsigned d) {  // type (1, 2, ..., d)
    std::map<unsigned, Natural> c;
    for (unsigned i = 1; i <= d; ++i) c[i] = 1;
    return IntersectionType(c);
  }

  void add(unsigned degree, const Natural& mult) {
    if (degree == 0) throw DomainError("IntersectionType: degree must be >= 1");
    counts_[degree] += mult;
    prune();
  }

  Natural mult(unsigned degree) const {
    auto it = counts_.find(degree);
    return it == counts_.end() ? Natural(0) : it->second;
  }
  unsigned max_degree() const {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
  }
  Natural total() const {
    Natural t = 0;
    for (auto& [d, l] : counts_) t += l;
    return t;
  }
  const std::map<unsigned, Natural>& counts() const { return counts_; }

  bool operator==(const IntersectionType& o) const { return counts_ == o.counts_; }

  // Canonical descending-degree rendering "[d:l_d ... 1:l_1]".
  std::string render() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
      if (!first) os << " ";
      os << it->first << ":" << dec(it->second);
      first = false;
    }
    os << "]";
    return os.str();
  }

 private:
  void prune() {
    for (auto it = counts_.begin(); it != counts_.end();) {
      if (sgn(it->second) < 0)
        throw DomainError("IntersectionType: negative multiplicity");
      it = (sgn(it->second) == 0) ? counts_.erase(it) : std::next(it);
    }
  }
  std::map<unsigned, Natural> counts_;  // degree -> multiplicity
};

// One step of taking a polar cone: a degree-d generator contributes polars
// of every degree 1..d, so the new multiplicity in degree j is the number of
// generators of degree >= j.
inline IntersectionType cone_type(const IntersectionType& t, unsigned k) {
  IntersectionType cur = t;
  for (unsigned step = 0; step < k; ++step) {
    std::map<unsigned, Natural> next;
    for (unsigned j = 1; j <= cur.max_degree(); ++j) {
      Natural sum = 0;
      for (auto& [i, l] : cur.counts())
        if (i >= j) sum += l;
      if (sgn(sum) > 0) next[j] = sum;
    }
    cur = IntersectionType(next);
  }
  return cur;
}

// Closed form for the k-th polar cone of a type-(1,...,d) chain:
// [d:1, j:binom(k+d-j, d-j) for j < d]; total binom(k+d, d-1).
inline IntersectionType cone_type_chain(unsigned d, unsigned k) {
  std::map<unsigned, Natural> c;
  for (unsigned j = 1; j <= d; ++j)
    c[j] = binom(Natural(k + d - j), Natural(d - j));
  return IntersectionType(c);
}

}  // namespace rdb
