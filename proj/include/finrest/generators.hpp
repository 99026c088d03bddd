#pragma once

// Built-in structure generators. pt(n) is the monoid of all partial maps on
// {0..n-1} composed left to right; sym_inv(n) its partial injections;
// powerset(k) the Boolean algebra of subsets of a k-set; powerset_lrm(k) that
// algebra viewed as a left restriction monoid (s+ = s, product = meet);
// trivial_plus(M) a monoid with the constant plus.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "finrest/core.hpp"
#include "finrest/restriction.hpp"

namespace finrest {

// A partial map on {0..n-1}: img[i] in 0..n-1, or n for "undefined".
using PartialMap = std::vector<int>;

inline PartialMap pt_identity_map(int n) {
  PartialMap m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

// Left-to-right composition: first a, then b.
inline PartialMap pt_compose(const PartialMap& a, const PartialMap& b, int n) {
  PartialMap out(n, n);
  for (int i = 0; i < n; ++i)
    if (a[i] < n && b[a[i]] < n) out[i] = b[a[i]];
  return out;
}

inline PartialMap pt_domain_identity(const PartialMap& a, int n) {
  PartialMap out(n, n);
  for (int i = 0; i < n; ++i)
    if (a[i] < n) out[i] = i;
  return out;
}

inline bool pt_injective(const PartialMap& a, int n) {
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (a[i] >= n) continue;
    if (seen[a[i]]) return false;
    seen[a[i]] = true;
  }
  return true;
}

// All (n+1)^n partial maps in lexicographic order of their image vectors.
inline std::vector<PartialMap> pt_elements(int n) {
  std::vector<PartialMap> maps;
  PartialMap cur(n, 0);
  while (true) {
    maps.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return maps;
}

inline int pt_index_of(const std::vector<PartialMap>& maps, const PartialMap& m) {
  auto it = std::lower_bound(maps.begin(), maps.end(), m);
  if (it == maps.end() || *it != m) fail_structural("partial map not found in carrier");
  return static_cast<int>(it - maps.begin());
}

inline LeftRestrictionMonoid lrm_from_maps(const std::vector<PartialMap>& maps, int n) {
  int k = static_cast<int>(maps.size());
  if (k > kMaxElements) throw Error(Errc::size_cap, "generated monoid exceeds the element cap");
  LeftRestrictionMonoid s;
  s.monoid.size = k;
  s.monoid.identity = pt_index_of(maps, pt_identity_map(n));
  s.monoid.mult.assign(k, std::vector<int>(k, 0));
  s.plus.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    s.plus[i] = pt_index_of(maps, pt_domain_identity(maps[i], n));
    for (int j = 0; j < k; ++j)
      s.monoid.mult[i][j] = pt_index_of(maps, pt_compose(maps[i], maps[j], n));
  }
  s.zero = pt_index_of(maps, PartialMap(n, n));
  return s;
}

// The partial transformation monoid PT_n, with its carrier maps.
struct PtMonoid {
  int points = 0;
  LeftRestrictionMonoid lrm;
  std::vector<PartialMap> maps;

  int index(const PartialMap& m) const { return pt_index_of(maps, m); }
};

inline PtMonoid pt(int n) {
  if (n < 1) throw Error(Errc::usage, "pt(n) requires n >= 1");
  PtMonoid out;
  out.points = n;
  out.maps = pt_elements(n);
  out.lrm = lrm_from_maps(out.maps, n);
  return out;
}

inline PtMonoid sym_inv(int n) {
  if (n < 1) throw Error(Errc::usage, "sym_inv(n) requires n >= 1");
  PtMonoid out;
  out.points = n;
  for (const auto& m : pt_elements(n))
    if (pt_injective(m, n)) out.maps.push_back(m);
  out.lrm = lrm_from_maps(out.maps, n);
  return out;
}

// Boolean algebra of subsets of a k-set; element i is the bitmask i.
inline BooleanAlgebra powerset(int k) {
  if (k < 1 || k > 8) throw Error(Errc::usage, "powerset(k) requires 1 <= k <= 8");
  int n = 1 << k;
  BooleanAlgebra b;
  b.lattice.meet.size = n;
  b.lattice.meet.identity = n - 1;
  b.lattice.meet.mult.assign(n, std::vector<int>(n, 0));
  b.join.assign(n, std::vector<int>(n, 0));
  b.complement.assign(n, 0);
  b.bottom = 0;
  for (int i = 0; i < n; ++i) {
    b.complement[i] = (n - 1) & ~i;
    for (int j = 0; j < n; ++j) {
      b.lattice.meet.mult[i][j] = i & j;
      b.join[i][j] = i | j;
    }
  }
  return b;
}

// A Boolean algebra as a left restriction monoid: product = meet, s+ = s.
inline LeftRestrictionMonoid boolean_as_lrm(const BooleanAlgebra& b) {
  LeftRestrictionMonoid s;
  s.monoid = b.lattice.meet;
  s.plus.resize(b.size());
  for (int i = 0; i < b.size(); ++i) s.plus[i] = i;
  s.zero = b.bottom;
  return s;
}

inline LeftRestrictionMonoid powerset_lrm(int k) { return boolean_as_lrm(powerset(k)); }

// Any monoid as a left restriction monoid with m+ = 1. No zero.
inline LeftRestrictionMonoid trivial_plus(const FiniteMonoid& m) {
  validate_monoid_shape(m);
  LeftRestrictionMonoid s;
  s.monoid = m;
  s.plus.assign(m.size, m.identity);
  return s;
}

inline FiniteMonoid cyclic_monoid(int n) {
  if (n < 1) throw Error(Errc::usage, "cyclic(n) requires n >= 1");
  FiniteMonoid m;
  m.size = n;
  m.identity = 0;
  m.mult.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.mult[i][j] = (i + j) % n;
  return m;
}

// Identity adjoined to the right-zero semigroup {a,b}: xy = y for y != 1.
inline FiniteMonoid right_zero_monoid3() {
  FiniteMonoid m;
  m.size = 3;
  m.identity = 0;
  m.mult = {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}};
  return m;
}

}  // namespace finrest
