#pragma once

// Left restriction monoids: the plus operation, projections and totals, the
// natural partial order, right compatibility, joins, and the Boolean axioms.
//
// A left restriction monoid is a monoid with a unary operation s -> s+
// satisfying
//   (LR1) (s+)+ = s+            (LR2) (s+t+)+ = s+t+
//   (LR3) s+t+ = t+s+           (LR4) s+s = s
//   (LR5) (st)+ = (st+)+        (LR6) st+ = (st)+s
// The canonical model is the monoid of partial maps on a finite set composed
// left to right, with s+ the partial identity on the domain of s.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finrest/core.hpp"
#include "finrest/report.hpp"

namespace finrest {

struct LeftRestrictionMonoid {
  FiniteMonoid monoid;
  std::vector<int> plus;
  std::optional<int> zero;

  int size() const { return monoid.size; }
  int identity() const { return monoid.identity; }
  int mul(int a, int b) const { return monoid.mul(a, b); }
  int plus_of(int a) const { return plus[a]; }
  bool is_projection(int a) const { return plus[a] == a; }
  bool is_total(int a) const { return plus[a] == monoid.identity; }
};

inline void validate_lrm_shape(const LeftRestrictionMonoid& s) {
  validate_monoid_shape(s.monoid);
  validate_vector(s.plus, s.size(), s.size(), "lrm plus");
  if (s.zero && (*s.zero < 0 || *s.zero >= s.size())) fail_structural("lrm: zero index out of range");
}

// s <= t iff s = s+ t.
inline bool natural_leq(const LeftRestrictionMonoid& s, int a, int b) {
  return s.mul(s.plus_of(a), b) == a;
}

// a ~r b iff a+ b = b+ a. Necessary for a join to exist.
inline bool right_compatible(const LeftRestrictionMonoid& s, int a, int b) {
  return s.mul(s.plus_of(a), b) == s.mul(s.plus_of(b), a);
}

inline bool right_orthogonal(const LeftRestrictionMonoid& s, int a, int b) {
  if (!s.zero) return false;
  return s.mul(s.plus_of(a), s.plus_of(b)) == *s.zero;
}

inline std::vector<int> projections(const LeftRestrictionMonoid& s) {
  std::vector<int> out;
  for (int a = 0; a < s.size(); ++a)
    if (s.is_projection(a)) out.push_back(a);
  return out;
}

inline std::vector<int> totals(const LeftRestrictionMonoid& s) {
  std::vector<int> out;
  for (int a = 0; a < s.size(); ++a)
    if (s.is_total(a)) out.push_back(a);
  return out;
}

// Least upper bound in the natural order, by scanning all upper bounds.
// Empty result means none exists.
inline std::optional<int> join_scan(const LeftRestrictionMonoid& s, int a, int b) {
  std::vector<int> ub;
  for (int u = 0; u < s.size(); ++u)
    if (natural_leq(s, a, u) && natural_leq(s, b, u)) ub.push_back(u);
  for (int u : ub) {
    bool least = true;
    for (int v : ub)
      if (!natural_leq(s, u, v)) { least = false; break; }
    if (least) return u;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Axiom suite (LR1)-(LR6).

inline std::vector<NamedAxiom> lrm_axioms(const LeftRestrictionMonoid& s) {
  int n = s.size();
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("LR1", {n}, [&s](const std::vector<int>& t) {
    return s.plus_of(s.plus_of(t[0])) != s.plus_of(t[0]);
  }));
  axs.push_back(make_axiom("LR2", {n, n}, [&s](const std::vector<int>& t) {
    int p = s.mul(s.plus_of(t[0]), s.plus_of(t[1]));
    return s.plus_of(p) != p;
  }));
  axs.push_back(make_axiom("LR3", {n, n}, [&s](const std::vector<int>& t) {
    return s.mul(s.plus_of(t[0]), s.plus_of(t[1])) != s.mul(s.plus_of(t[1]), s.plus_of(t[0]));
  }));
  axs.push_back(make_axiom("LR4", {n}, [&s](const std::vector<int>& t) {
    return s.mul(s.plus_of(t[0]), t[0]) != t[0];
  }));
  axs.push_back(make_axiom("LR5", {n, n}, [&s](const std::vector<int>& t) {
    return s.plus_of(s.mul(t[0], t[1])) != s.plus_of(s.mul(t[0], s.plus_of(t[1])));
  }));
  axs.push_back(make_axiom("LR6", {n, n}, [&s](const std::vector<int>& t) {
    return s.mul(t[0], s.plus_of(t[1])) != s.mul(s.plus_of(s.mul(t[0], t[1])), t[0]);
  }));
  if (s.zero) {
    int z = *s.zero;
    axs.push_back(make_axiom("zero_projection", {1}, [&s, z](const std::vector<int>&) {
      return s.plus_of(z) != z;
    }));
    axs.push_back(make_axiom("zero_absorbing", {n}, [&s, z](const std::vector<int>& t) {
      return s.mul(z, t[0]) != z || s.mul(t[0], z) != z;
    }));
  }
  return axs;
}

inline AxiomReport check_lrm(const LeftRestrictionMonoid& s, const std::string& name = "lrm") {
  validate_lrm_shape(s);
  auto axs = monoid_axioms(s.monoid);
  auto more = lrm_axioms(s);
  axs.insert(axs.end(), more.begin(), more.end());
  return run_axioms(name, axs);
}

// ---------------------------------------------------------------------------
// Boolean structure, discovered from the natural order on the projections.
//
// (B1) Proj(S) is a Boolean algebra under the natural order, with the
//      semigroup zero as bottom and the identity as top.
// (B2) Right-compatible pairs of elements have joins.
// (B3) Multiplication distributes over binary joins on both sides.
//
// The structure is a property, not data: joins and complements are found by
// exhaustive search, and absence certifies failure.

struct BooleanContext {
  std::vector<int> proj;        // projections of S, increasing
  std::vector<int> proj_index;  // S element -> position in proj, or -1
  BooleanAlgebra algebra;       // over projection positions; -1 entries where discovery failed
  Table join;                   // |S| x |S|; join[a][b] = -1 if a !~r b or no join found
  bool complete = true;         // all joins/complements were found

  int top_pos() const { return algebra.top(); }
  int bottom_pos() const { return algebra.bottom; }
  // Join of two S elements; requires a recorded join.
  int join_of(int a, int b) const { return join[a][b]; }
  // Complement of a projection, as an S element (-1 if undiscovered).
  int comp_elt(int e) const {
    int pe = proj_index[e];
    if (pe < 0) return -1;
    int pc = algebra.complement[pe];
    return pc < 0 ? -1 : proj[pc];
  }
};

inline BooleanContext make_boolean_context(const LeftRestrictionMonoid& s) {
  validate_lrm_shape(s);
  BooleanContext ctx;
  ctx.proj = projections(s);
  ctx.proj_index.assign(s.size(), -1);
  for (size_t i = 0; i < ctx.proj.size(); ++i) ctx.proj_index[ctx.proj[i]] = static_cast<int>(i);
  int np = static_cast<int>(ctx.proj.size());

  // Meet on projections is the product (commutative and idempotent by LR2/LR3).
  FiniteMonoid meet;
  meet.size = np;
  meet.identity = ctx.proj_index[s.identity()];
  meet.mult.assign(np, std::vector<int>(np, 0));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      int m = s.mul(ctx.proj[i], ctx.proj[j]);
      int pos = ctx.proj_index[m];
      if (pos < 0) fail_structural("projections not closed under product");
      meet.mult[i][j] = pos;
    }
  ctx.algebra.lattice.meet = meet;
  ctx.algebra.bottom = s.zero ? ctx.proj_index[*s.zero] : -1;

  // Joins within the projections, by least-upper-bound scan in the natural order.
  ctx.algebra.join.assign(np, std::vector<int>(np, -1));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      std::vector<int> ub;
      for (int k = 0; k < np; ++k)
        if (ctx.algebra.lattice.leq(i, k) && ctx.algebra.lattice.leq(j, k)) ub.push_back(k);
      for (int u : ub) {
        bool least = true;
        for (int v : ub)
          if (!ctx.algebra.lattice.leq(u, v)) { least = false; break; }
        if (least) { ctx.algebra.join[i][j] = u; break; }
      }
      if (ctx.algebra.join[i][j] < 0) ctx.complete = false;
    }

  // Complements: least f with ef = bottom and e join f = top.
  ctx.algebra.complement.assign(np, -1);
  if (ctx.algebra.bottom >= 0) {
    for (int i = 0; i < np; ++i) {
      for (int f = 0; f < np; ++f) {
        if (ctx.algebra.lattice.meet_of(i, f) == ctx.algebra.bottom &&
            ctx.algebra.join[i][f] == ctx.algebra.lattice.top()) {
          ctx.algebra.complement[i] = f;
          break;
        }
      }
      if (ctx.algebra.complement[i] < 0) ctx.complete = false;
    }
  } else {
    ctx.complete = false;
  }

  // Joins across the whole monoid, for right-compatible pairs.
  int n = s.size();
  ctx.join.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!right_compatible(s, a, b)) continue;
      auto j = join_scan(s, a, b);
      if (j)
        ctx.join[a][b] = *j;
      else
        ctx.complete = false;
    }
  return ctx;
}

// Join of a right-compatible pair. Typed errors certify the failure mode.
inline int join(const LeftRestrictionMonoid& s, int a, int b) {
  if (!right_compatible(s, a, b)) throw Error(Errc::not_compatible, "elements are not right-compatible");
  auto j = join_scan(s, a, b);
  if (!j) throw Error(Errc::no_join, "no least upper bound exists");
  return *j;
}

// The returned predicates reference the monoid itself (which the caller
// keeps alive) but own a shared copy of the discovered context, so the
// suite may outlive this call.
inline std::vector<NamedAxiom> boolean_lrm_axioms(const LeftRestrictionMonoid& s,
                                                  const BooleanContext& ctx_in) {
  int n = s.size();
  int np = static_cast<int>(ctx_in.proj.size());
  auto ctx = std::make_shared<const BooleanContext>(ctx_in);
  std::vector<NamedAxiom> axs;

  axs.push_back(make_axiom("B1.zero_projection", {1}, [&s](const std::vector<int>&) {
    return !s.zero || s.plus_of(*s.zero) != *s.zero;
  }));
  axs.push_back(make_axiom("B1.nondegenerate", {1}, [&s, ctx](const std::vector<int>&) {
    return !s.zero || ctx->algebra.bottom == ctx->algebra.top();
  }));
  axs.push_back(make_axiom("B1.join_exists", {np, np}, [ctx](const std::vector<int>& t) {
    return ctx->algebra.join[t[0]][t[1]] < 0;
  }));
  axs.push_back(make_axiom("B1.complement_exists", {np}, [ctx](const std::vector<int>& t) {
    return ctx->algebra.complement[t[0]] < 0;
  }));
  axs.push_back(make_axiom("B1.join_commutative", {np, np}, [ctx](const std::vector<int>& t) {
    return ctx->algebra.join[t[0]][t[1]] != ctx->algebra.join[t[1]][t[0]];
  }));
  axs.push_back(make_axiom("B1.join_associative", {np, np, np}, [ctx](const std::vector<int>& t) {
    const auto& alg = ctx->algebra;
    int ab = alg.join[t[0]][t[1]], bc = alg.join[t[1]][t[2]];
    if (ab < 0 || bc < 0) return true;
    return alg.join[ab][t[2]] != alg.join[t[0]][bc];
  }));
  axs.push_back(make_axiom("B1.absorption", {np, np}, [ctx](const std::vector<int>& t) {
    const auto& alg = ctx->algebra;
    int j = alg.join[t[0]][t[1]];
    if (j < 0) return true;
    return alg.meet_of(t[0], j) != t[0] ||
           alg.join[t[0]][alg.meet_of(t[0], t[1])] != t[0];
  }));
  axs.push_back(make_axiom("B1.distributive", {np, np, np}, [ctx](const std::vector<int>& t) {
    const auto& alg = ctx->algebra;
    int e = t[0], f = t[1], g = t[2];
    int fg = alg.join[f][g];
    if (fg < 0) return true;
    int lhs = alg.meet_of(e, fg);
    int ef = alg.meet_of(e, f), eg = alg.meet_of(e, g);
    if (alg.join[ef][eg] != lhs) return true;
    int ef2 = alg.join[e][f], eg2 = alg.join[e][g];
    if (ef2 < 0 || eg2 < 0) return true;
    return alg.join[e][alg.meet_of(f, g)] != alg.meet_of(ef2, eg2);
  }));
  axs.push_back(make_axiom("B1.complement_laws", {np}, [ctx](const std::vector<int>& t) {
    const auto& alg = ctx->algebra;
    int c = alg.complement[t[0]];
    if (c < 0) return true;
    return alg.meet_of(t[0], c) != alg.bottom || alg.join[t[0]][c] != alg.top();
  }));

  axs.push_back(make_axiom(
      "B2.join_exists", {n, n},
      [&s, ctx](const std::vector<int>& t) {
        return right_compatible(s, t[0], t[1]) && ctx->join[t[0]][t[1]] < 0;
      },
      [](const std::vector<int>& t) {
        return "right-compatible pair (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ") has no join";
      }));
  axs.push_back(make_axiom("B3.distributive", {n, n, n}, [&s, ctx](const std::vector<int>& t) {
    int a = t[0], b = t[1], c = t[2];
    int j = ctx->join[b][c];
    if (j < 0) return false;  // quantified over pairs whose join exists
    int ab = s.mul(a, b), ac = s.mul(a, c);
    int jl = ctx->join[ab][ac];
    if (jl < 0 || s.mul(a, j) != jl) return true;
    int ba = s.mul(b, a), ca = s.mul(c, a);
    int jr = ctx->join[ba][ca];
    return jr < 0 || s.mul(j, a) != jr;
  }));
  // Corollary checks: (b v c)+ = b+ v c+, and the complement shift
  // s ebar = comp((se)+) s, for every element and projection.
  axs.push_back(make_axiom("join_plus", {n, n}, [&s, ctx](const std::vector<int>& t) {
    int j = ctx->join[t[0]][t[1]];
    if (j < 0) return false;
    int jp = ctx->join[s.plus_of(t[0])][s.plus_of(t[1])];
    return jp < 0 || s.plus_of(j) != jp;
  }));
  axs.push_back(make_axiom("complement_shift", {n, np}, [&s, ctx](const std::vector<int>& t) {
    int a = t[0], e = ctx->proj[t[1]];
    int ce = ctx->comp_elt(e);
    if (ce < 0) return true;
    int se_plus = s.plus_of(s.mul(a, e));
    int cse = ctx->comp_elt(se_plus);
    if (cse < 0) return true;
    return s.mul(a, ce) != s.mul(cse, a);
  }));
  return axs;
}

inline AxiomReport check_boolean_lrm(const LeftRestrictionMonoid& s, const std::string& name = "boolean_lrm") {
  auto ctx = make_boolean_context(s);
  return run_axioms(name, boolean_lrm_axioms(s, ctx));
}

// Throws unless S carries a (discoverable) Boolean structure.
inline BooleanContext require_boolean(const LeftRestrictionMonoid& s) {
  if (!s.zero) throw Error(Errc::not_boolean, "monoid has no zero");
  auto ctx = make_boolean_context(s);
  if (!ctx.complete) throw Error(Errc::not_boolean, "Boolean structure is incomplete (missing joins or complements)");
  return ctx;
}

// ---------------------------------------------------------------------------
// Factorizability: every element below a total element.

struct FactorizableResult {
  bool factorizable = true;
  int witness = -1;  // element with no total above it
};

inline FactorizableResult is_factorizable(const LeftRestrictionMonoid& s) {
  FactorizableResult r;
  for (int a = 0; a < s.size(); ++a) {
    bool found = false;
    for (int t = 0; t < s.size(); ++t)
      if (s.is_total(t) && natural_leq(s, a, t)) { found = true; break; }
    if (!found) {
      r.factorizable = false;
      r.witness = a;
      return r;
    }
  }
  return r;
}

// Least-index total element above a; the canonical choice throughout.
inline std::optional<int> least_total_above(const LeftRestrictionMonoid& s, int a) {
  for (int t = 0; t < s.size(); ++t)
    if (s.is_total(t) && natural_leq(s, a, t)) return t;
  return std::nullopt;
}

// The total cover s v comp(s+): a total element above s with s = s+ cover.
inline int total_cover(const LeftRestrictionMonoid& s, const BooleanContext& ctx, int a) {
  int c = ctx.comp_elt(s.plus_of(a));
  if (c < 0) throw Error(Errc::not_boolean, "no complement for the support of the element");
  int j = ctx.join[a][c];
  if (j < 0) throw Error(Errc::no_join, "total cover join missing");
  return j;
}

// An LRM induced on a subset (which must be closed and contain the identity).
struct SubLrm {
  LeftRestrictionMonoid lrm;
  std::vector<int> elements;  // sub index -> parent index, increasing
  std::vector<int> index_of;  // parent index -> sub index or -1
};

inline SubLrm induced_sub_lrm(const LeftRestrictionMonoid& s, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  SubLrm out;
  out.elements = subset;
  out.index_of.assign(s.size(), -1);
  for (size_t i = 0; i < subset.size(); ++i) out.index_of[subset[i]] = static_cast<int>(i);
  int k = static_cast<int>(subset.size());
  if (out.index_of[s.identity()] < 0) fail_structural("subset does not contain the identity");
  out.lrm.monoid.size = k;
  out.lrm.monoid.identity = out.index_of[s.identity()];
  out.lrm.monoid.mult.assign(k, std::vector<int>(k, 0));
  out.lrm.plus.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    int pp = out.index_of[s.plus_of(subset[i])];
    if (pp < 0) fail_structural("subset not closed under plus");
    out.lrm.plus[i] = pp;
    for (int j = 0; j < k; ++j) {
      int m = out.index_of[s.mul(subset[i], subset[j])];
      if (m < 0) fail_structural("subset not closed under product");
      out.lrm.monoid.mult[i][j] = m;
    }
  }
  if (s.zero && out.index_of[*s.zero] >= 0) out.lrm.zero = out.index_of[*s.zero];
  return out;
}

// The down-set of the total elements: the largest factorizable sub-monoid.
inline SubLrm factorizable_part(const LeftRestrictionMonoid& s) {
  std::vector<int> subset;
  for (int a = 0; a < s.size(); ++a)
    if (least_total_above(s, a)) subset.push_back(a);
  return induced_sub_lrm(s, subset);
}

// ---------------------------------------------------------------------------
// Homomorphism checking.

struct HomCheck {
  bool ok = true;
  std::string condition;
  std::vector<int> witness;
};

inline HomCheck check_lrm_hom(const LeftRestrictionMonoid& s, const LeftRestrictionMonoid& t,
                              const std::vector<int>& theta, bool boolean_mode = false) {
  validate_vector(theta, s.size(), t.size(), "lrm hom map");
  HomCheck out;
  auto fail = [&out](const std::string& cond, std::vector<int> w) {
    out.ok = false;
    out.condition = cond;
    out.witness = std::move(w);
  };
  if (theta[s.identity()] != t.identity()) {
    fail("identity", {s.identity()});
    return out;
  }
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (theta[s.mul(a, b)] != t.mul(theta[a], theta[b])) {
        fail("multiplicative", {a, b});
        return out;
      }
  for (int a = 0; a < s.size(); ++a)
    if (theta[s.plus_of(a)] != t.plus_of(theta[a])) {
      fail("plus", {a});
      return out;
    }
  if (boolean_mode) {
    if (!s.zero || !t.zero) throw Error(Errc::not_boolean, "boolean hom check requires zeros");
    if (theta[*s.zero] != *t.zero) {
      fail("zero", {*s.zero});
      return out;
    }
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (!right_compatible(s, a, b)) continue;
        auto j = join_scan(s, a, b);
        if (!j) continue;
        auto jt = join_scan(t, theta[a], theta[b]);
        if (!jt || theta[*j] != *jt) {
          fail("join", {a, b});
          return out;
        }
      }
  }
  return out;
}

// Bijectivity plus the homomorphism conditions in both directions.
inline HomCheck check_lrm_iso(const LeftRestrictionMonoid& s, const LeftRestrictionMonoid& t,
                              const std::vector<int>& theta, bool boolean_mode = false) {
  HomCheck out;
  if (s.size() != t.size()) {
    out.ok = false;
    out.condition = "size";
    return out;
  }
  std::vector<int> inverse(t.size(), -1);
  for (int a = 0; a < s.size(); ++a) {
    if (theta[a] < 0 || theta[a] >= t.size() || inverse[theta[a]] >= 0) {
      out.ok = false;
      out.condition = "bijective";
      out.witness = {a};
      return out;
    }
    inverse[theta[a]] = a;
  }
  out = check_lrm_hom(s, t, theta, boolean_mode);
  if (!out.ok) return out;
  out = check_lrm_hom(t, s, inverse, boolean_mode);
  if (!out.ok) out.condition = "inverse_" + out.condition;
  return out;
}

}  // namespace finrest
