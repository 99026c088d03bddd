#pragma once

// Finite algebraic primitives represented as explicit tables: monoids,
// meet semilattices, Boolean algebras, partitions and right congruences.
// Elements are dense indices 0..n-1 throughout.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "finrest/report.hpp"

namespace finrest {

using Table = std::vector<std::vector<int>>;

struct FiniteMonoid {
  int size = 0;
  int identity = 0;
  Table mult;

  int mul(int a, int b) const { return mult[a][b]; }
};

// Meet semilattice with top element; the top is the identity of the meet.
struct Semilattice {
  FiniteMonoid meet;

  int size() const { return meet.size; }
  int top() const { return meet.identity; }
  int meet_of(int e, int f) const { return meet.mul(e, f); }
  bool leq(int e, int f) const { return meet.mul(e, f) == e; }
};

struct BooleanAlgebra {
  Semilattice lattice;
  int bottom = 0;
  Table join;
  std::vector<int> complement;

  int size() const { return lattice.size(); }
  int top() const { return lattice.top(); }
  int meet_of(int e, int f) const { return lattice.meet_of(e, f); }
  int join_of(int e, int f) const { return join[e][f]; }
  int comp(int e) const { return complement[e]; }
  bool leq(int e, int f) const { return lattice.leq(e, f); }
};

// Partition of 0..n-1; block[i] is the least element of i's block.
struct Partition {
  std::vector<int> block;

  int size() const { return static_cast<int>(block.size()); }
  bool same(int a, int b) const { return block[a] == block[b]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (block[i] != i) return false;
    return true;
  }
  bool is_universal() const {
    for (int i = 0; i < size(); ++i)
      if (block[i] != 0) return false;
    return size() > 0;
  }
  int class_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (block[i] == i) ++c;
    return c;
  }
  // Block representatives in increasing order.
  std::vector<int> representatives() const {
    std::vector<int> reps;
    for (int i = 0; i < size(); ++i)
      if (block[i] == i) reps.push_back(i);
    return reps;
  }
};

// Canonicalizes an arbitrary block-id labelling to least-representative form.
inline Partition canonical_partition(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size());
  Partition p;
  p.block.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (p.block[i] != -1) continue;
    for (int j = i; j < n; ++j)
      if (labels[j] == labels[i]) p.block[j] = i;
  }
  return p;
}

// Partition of 0..n-1 by an arbitrary key function.
template <typename Key>
Partition partition_by(int n, Key&& key) {
  std::vector<int> labels(n);
  std::vector<decltype(key(0))> seen;
  for (int i = 0; i < n; ++i) {
    auto k = key(i);
    int id = -1;
    for (size_t s = 0; s < seen.size(); ++s)
      if (seen[s] == k) { id = static_cast<int>(s); break; }
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.push_back(k);
    }
    labels[i] = id;
  }
  return canonical_partition(labels);
}

// ---------------------------------------------------------------------------
// Structural validation (distinct from axiom failure).

inline void validate_table(const Table& t, int rows, int cols, int range, const std::string& what) {
  if (static_cast<int>(t.size()) != rows) fail_structural(what + ": expected " + std::to_string(rows) + " rows");
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(t[r].size()) != cols)
      fail_structural(what + ": row " + std::to_string(r) + " is ragged");
    for (int c = 0; c < cols; ++c)
      if (t[r][c] < 0 || t[r][c] >= range)
        fail_structural(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
  }
}

inline void validate_vector(const std::vector<int>& v, int len, int range, const std::string& what) {
  if (static_cast<int>(v.size()) != len) fail_structural(what + ": expected length " + std::to_string(len));
  for (int i = 0; i < len; ++i)
    if (v[i] < 0 || v[i] >= range)
      fail_structural(what + ": entry " + std::to_string(i) + " out of range");
}

inline void validate_monoid_shape(const FiniteMonoid& m) {
  if (m.size <= 0) fail_structural("monoid: size must be positive");
  if (m.size > kMaxElements) throw Error(Errc::size_cap, "monoid exceeds the element cap");
  if (m.identity < 0 || m.identity >= m.size) fail_structural("monoid: identity index out of range");
  validate_table(m.mult, m.size, m.size, m.size, "monoid mult");
}

inline void validate_partition_shape(const Partition& p, int n) {
  validate_vector(p.block, n, n, "partition");
  for (int i = 0; i < n; ++i) {
    if (p.block[i] > i) fail_structural("partition: block id exceeds element (not least-representative)");
    if (p.block[p.block[i]] != p.block[i]) fail_structural("partition: block ids are not canonical");
  }
}

// ---------------------------------------------------------------------------
// Axiom suites.

inline std::vector<NamedAxiom> monoid_axioms(const FiniteMonoid& m) {
  int n = m.size;
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom(
      "associativity", {n, n, n},
      [&m](const std::vector<int>& t) { return m.mul(m.mul(t[0], t[1]), t[2]) != m.mul(t[0], m.mul(t[1], t[2])); },
      [](const std::vector<int>& t) {
        return "(ab)c != a(bc) at (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + ")";
      }));
  axs.push_back(make_axiom(
      "identity", {n},
      [&m](const std::vector<int>& t) {
        return m.mul(m.identity, t[0]) != t[0] || m.mul(t[0], m.identity) != t[0];
      }));
  return axs;
}

inline AxiomReport check_monoid(const FiniteMonoid& m, const std::string& name = "monoid") {
  validate_monoid_shape(m);
  return run_axioms(name, monoid_axioms(m));
}

inline std::vector<NamedAxiom> semilattice_axioms(const Semilattice& e) {
  auto axs = monoid_axioms(e.meet);
  int n = e.size();
  const FiniteMonoid& m = e.meet;
  axs.push_back(make_axiom("commutative", {n, n}, [&m](const std::vector<int>& t) {
    return m.mul(t[0], t[1]) != m.mul(t[1], t[0]);
  }));
  axs.push_back(make_axiom("idempotent", {n}, [&m](const std::vector<int>& t) {
    return m.mul(t[0], t[0]) != t[0];
  }));
  return axs;
}

inline AxiomReport check_semilattice(const Semilattice& e, const std::string& name = "semilattice") {
  validate_monoid_shape(e.meet);
  return run_axioms(name, semilattice_axioms(e));
}

// e <= f iff ef = e (the standard semilattice order).
inline bool semilattice_leq(const Semilattice& e, int a, int b) { return e.leq(a, b); }

inline void validate_boolean_algebra_shape(const BooleanAlgebra& b) {
  validate_monoid_shape(b.lattice.meet);
  int n = b.size();
  if (b.bottom < 0 || b.bottom >= n) fail_structural("boolean algebra: bottom out of range");
  validate_table(b.join, n, n, n, "boolean algebra join");
  validate_vector(b.complement, n, n, "boolean algebra complement");
}

inline std::vector<NamedAxiom> boolean_algebra_axioms(const BooleanAlgebra& b) {
  auto axs = semilattice_axioms(b.lattice);
  int n = b.size();
  axs.push_back(make_axiom("join_commutative", {n, n}, [&b](const std::vector<int>& t) {
    return b.join_of(t[0], t[1]) != b.join_of(t[1], t[0]);
  }));
  axs.push_back(make_axiom("join_associative", {n, n, n}, [&b](const std::vector<int>& t) {
    return b.join_of(b.join_of(t[0], t[1]), t[2]) != b.join_of(t[0], b.join_of(t[1], t[2]));
  }));
  axs.push_back(make_axiom("join_idempotent", {n}, [&b](const std::vector<int>& t) {
    return b.join_of(t[0], t[0]) != t[0];
  }));
  axs.push_back(make_axiom("absorption", {n, n}, [&b](const std::vector<int>& t) {
    return b.meet_of(t[0], b.join_of(t[0], t[1])) != t[0] || b.join_of(t[0], b.meet_of(t[0], t[1])) != t[0];
  }));
  axs.push_back(make_axiom("distributive", {n, n, n}, [&b](const std::vector<int>& t) {
    int e = t[0], f = t[1], g = t[2];
    return b.meet_of(e, b.join_of(f, g)) != b.join_of(b.meet_of(e, f), b.meet_of(e, g)) ||
           b.join_of(e, b.meet_of(f, g)) != b.meet_of(b.join_of(e, f), b.join_of(e, g));
  }));
  axs.push_back(make_axiom("complement_meet", {n}, [&b](const std::vector<int>& t) {
    return b.meet_of(t[0], b.comp(t[0])) != b.bottom;
  }));
  axs.push_back(make_axiom("complement_join", {n}, [&b](const std::vector<int>& t) {
    return b.join_of(t[0], b.comp(t[0])) != b.top();
  }));
  axs.push_back(make_axiom("bottom", {n}, [&b](const std::vector<int>& t) {
    return b.meet_of(t[0], b.bottom) != b.bottom || b.join_of(t[0], b.bottom) != t[0];
  }));
  axs.push_back(make_axiom("top", {n}, [&b](const std::vector<int>& t) {
    return b.meet_of(t[0], b.top()) != t[0] || b.join_of(t[0], b.top()) != b.top();
  }));
  axs.push_back(make_axiom("nondegenerate", {1}, [&b](const std::vector<int>&) {
    return b.bottom == b.top();
  }));
  return axs;
}

inline AxiomReport check_boolean_algebra(const BooleanAlgebra& b, const std::string& name = "boolean_algebra") {
  validate_boolean_algebra_shape(b);
  return run_axioms(name, boolean_algebra_axioms(b));
}

// ---------------------------------------------------------------------------
// Right congruences.

struct CongruenceWitness {
  bool ok = true;
  int a = -1, b = -1, k = -1;  // a == b (mod P) but ak != bk (mod P)
};

inline std::vector<NamedAxiom> right_congruence_axioms(const FiniteMonoid& m, const Partition& p) {
  int n = m.size;
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom(
      "right_closure", {n, n, n},
      [&m, &p](const std::vector<int>& t) {
        return p.same(t[0], t[1]) && !p.same(m.mul(t[0], t[2]), m.mul(t[1], t[2]));
      },
      [](const std::vector<int>& t) {
        return "a=" + std::to_string(t[0]) + " b=" + std::to_string(t[1]) + " k=" + std::to_string(t[2]);
      }));
  return axs;
}

inline CongruenceWitness check_right_congruence(const FiniteMonoid& m, const Partition& p) {
  validate_monoid_shape(m);
  validate_partition_shape(p, m.size);
  auto report = run_axioms("right_congruence", right_congruence_axioms(m, p));
  CongruenceWitness w;
  if (!report.ok()) {
    const auto& t = report.entries[0].witness;
    w.ok = false;
    w.a = t[0];
    w.b = t[1];
    w.k = t[2];
  }
  return w;
}

}  // namespace finrest
