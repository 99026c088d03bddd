#pragma once

// [E|M]-sets: a carrier Y with an M-action and a family of equivalence
// relations indexed by E, subject to (MPA1)-(MPA6) and, over a Boolean E,
// (MPA7)-(MPA9). These encode exactly the factorizable supported actions of
// the monoid S with [E|M] = [Proj(S)|Tot(S)]:
//
//   from_action : X  |->  X_1 with x ~e y iff e.x = e.y
//   to_action   : Y  |->  union over e of Y/~e, with s.[x]_e = [s^.x]_{(se)+}
//
// and the two constructions are mutually inverse up to isomorphism.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "finrest/action.hpp"
#include "finrest/core.hpp"
#include "finrest/matched_pair.hpp"
#include "finrest/report.hpp"
#include "finrest/restriction.hpp"

namespace finrest {

struct EmSet {
  std::shared_ptr<const MatchedPair> pair;
  int carrier = 0;
  Table act;                  // |M| x carrier
  std::vector<Partition> eq;  // per E element, a partition of the carrier
  bool boolean_flag = false;

  int apply(int m, int y) const { return act[m][y]; }
  bool same(int e, int x, int y) const { return eq[e].same(x, y); }
};

inline void validate_em_set_shape(const EmSet& y) {
  if (!y.pair) fail_structural("em_set: missing matched pair");
  validate_matched_pair_shape(*y.pair);
  if (y.carrier < 0 || y.carrier > kMaxElements) throw Error(Errc::size_cap, "em_set carrier out of range");
  validate_table(y.act, y.pair->m_size(), y.carrier, std::max(y.carrier, 1), "em_set action");
  if (static_cast<int>(y.eq.size()) != y.pair->e_size())
    fail_structural("em_set: equivalence family must have one partition per E element");
  for (const auto& p : y.eq) validate_partition_shape(p, y.carrier);
  if (y.boolean_flag && !y.pair->is_boolean())
    fail_structural("em_set: Boolean flag requires a Boolean matched pair");
}

// ---------------------------------------------------------------------------
// Axiom suites (MPA1)-(MPA9).

inline std::vector<NamedAxiom> em_set_axioms(const EmSet& y) {
  const MatchedPair& p = *y.pair;
  int nm = p.m_size(), ne = p.e_size(), k = y.carrier;
  int top = p.top();
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("MPA1.identity", {k}, [&y, &p](const std::vector<int>& t) {
    return y.apply(p.M.identity, t[0]) != t[0];
  }));
  axs.push_back(make_axiom("MPA1.composition", {nm, nm, k}, [&y, &p](const std::vector<int>& t) {
    return y.apply(p.M.mul(t[0], t[1]), t[2]) != y.apply(t[0], y.apply(t[1], t[2]));
  }));
  axs.push_back(make_axiom("MPA3.identity_eq", {k, k}, [&y, top](const std::vector<int>& t) {
    return t[0] != t[1] && y.same(top, t[0], t[1]);
  }));
  axs.push_back(make_axiom("MPA4.refinement", {ne, ne, k, k}, [&y, &p](const std::vector<int>& t) {
    return p.E.leq(t[1], t[0]) && y.same(t[0], t[2], t[3]) && !y.same(t[1], t[2], t[3]);
  }));
  axs.push_back(make_axiom("MPA5", {ne, nm, nm, k}, [&y, &p](const std::vector<int>& t) {
    return p.cong_same(t[0], t[1], t[2]) &&
           !y.same(t[0], y.apply(t[1], t[3]), y.apply(t[2], t[3]));
  }));
  axs.push_back(make_axiom("MPA6", {ne, k, k, nm}, [&y, &p](const std::vector<int>& t) {
    return y.same(t[0], t[1], t[2]) &&
           !y.same(p.star(t[3], t[0]), y.apply(t[3], t[1]), y.apply(t[3], t[2]));
  }));
  return axs;
}

inline std::vector<NamedAxiom> boolean_em_set_axioms(const EmSet& y) {
  const MatchedPair& p = *y.pair;
  const BooleanStructure& b = *p.boolean_e;
  int ne = p.e_size(), k = y.carrier;
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("MPA7.universal", {k}, [&y, &b](const std::vector<int>& t) {
    return !y.same(b.bottom, t[0], 0);
  }));
  axs.push_back(make_axiom("MPA8.gluing", {ne, ne, k, k}, [&y, &b](const std::vector<int>& t) {
    return y.same(t[0], t[2], t[3]) && y.same(t[1], t[2], t[3]) &&
           !y.same(b.join[t[0]][t[1]], t[2], t[3]);
  }));
  axs.push_back(make_axiom(
      "MPA9.interpolation", {k, k, ne},
      [&y, &b, k](const std::vector<int>& t) {
        int x = t[0], z = t[1], e = t[2], ec = b.complement[e];
        for (int w = 0; w < k; ++w)
          if (y.same(e, w, x) && y.same(ec, w, z)) return false;
        return true;
      },
      [](const std::vector<int>& t) {
        return "no interpolant for x=" + std::to_string(t[0]) + " y=" + std::to_string(t[1]) +
               " e=" + std::to_string(t[2]);
      }));
  return axs;
}

inline AxiomReport check_em_set(const EmSet& y, const std::string& name = "em_set") {
  validate_em_set_shape(y);
  auto axs = em_set_axioms(y);
  if (y.boolean_flag) {
    auto more = boolean_em_set_axioms(y);
    axs.insert(axs.end(), more.begin(), more.end());
  }
  return run_axioms(name, axs);
}

// Least w with w ~e x and w ~ebar y.
inline int mpa9_witness(const EmSet& y, int x, int z, int e) {
  if (!y.boolean_flag || !y.pair->is_boolean())
    throw Error(Errc::not_boolean, "mpa9_witness requires a Boolean em_set");
  int ec = y.pair->boolean_e->complement[e];
  for (int w = 0; w < y.carrier; ++w)
    if (y.same(e, w, x) && y.same(ec, w, z)) return w;
  throw Error(Errc::no_witness, "no interpolant exists (MPA9 fails)");
}

// Least w with w ~e x and w ~f z, given x ~ef z; interpolants agree up to
// the join congruence.
inline int w_interpolate(const EmSet& y, int x, int z, int e, int f) {
  if (!y.boolean_flag || !y.pair->is_boolean())
    throw Error(Errc::not_boolean, "w_interpolate requires a Boolean em_set");
  const auto& b = *y.pair->boolean_e;
  int ef = y.pair->E.meet_of(e, f);
  if (!y.same(ef, x, z)) throw Error(Errc::precondition, "w_interpolate requires x ~ef y");
  int via_mpa9 = mpa9_witness(y, x, z, e);
  if (!y.same(e, via_mpa9, x) || !y.same(f, via_mpa9, z))
    throw Error(Errc::no_witness, "mpa9 route failed to interpolate");
  int least = -1;
  int ejf = b.join[e][f];
  for (int w = 0; w < y.carrier; ++w) {
    if (!y.same(e, w, x) || !y.same(f, w, z)) continue;
    if (least < 0) least = w;
    if (!y.same(ejf, w, least))
      throw Error(Errc::no_witness, "interpolant not unique up to the join congruence");
  }
  return least;
}

// ---------------------------------------------------------------------------
// The functor from factorizable supported actions to [E|M]-sets.

struct ActionToEm {
  EmSet em;
  ExtractedPair extracted;    // the matched pair of S, with index maps
  std::vector<int> top_elts;  // em carrier index -> action carrier index (X_1)
  std::vector<int> top_pos;   // action carrier index -> em index or -1
};

inline ActionToEm from_action(const SupportedAction& a) {
  validate_action_shape(a);
  auto fact = is_factorizable_action(a);
  if (!fact.factorizable)
    throw Error(Errc::not_factorizable,
                "carrier element " + std::to_string(fact.witness) + " lies below no top-fiber element");
  ActionToEm out;
  out.extracted = from_lrm(*a.S, a.boolean_mode);
  out.top_elts = fiber(a, a.S->identity());
  out.top_pos.assign(a.carrier, -1);
  for (size_t i = 0; i < out.top_elts.size(); ++i) out.top_pos[out.top_elts[i]] = static_cast<int>(i);

  EmSet& y = out.em;
  y.pair = std::make_shared<const MatchedPair>(out.extracted.pair);
  y.boolean_flag = a.boolean_mode;
  y.carrier = static_cast<int>(out.top_elts.size());
  int nm = y.pair->m_size();
  y.act.assign(nm, std::vector<int>(std::max(y.carrier, 1), 0));
  for (int m = 0; m < nm; ++m)
    for (int i = 0; i < y.carrier; ++i) {
      int img = out.top_pos[a.apply(out.extracted.total_elements[m], out.top_elts[i])];
      if (img < 0) fail_structural("total elements do not preserve the top fiber");
      y.act[m][i] = img;
    }
  for (int e = 0; e < y.pair->e_size(); ++e) {
    int pe = out.extracted.proj_elements[e];
    y.eq.push_back(partition_by(y.carrier, [&](int i) { return a.apply(pe, out.top_elts[i]); }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The functor from [E|M]-sets to supported actions.

struct EmToAction {
  SupportedAction action;
  std::vector<std::pair<int, int>> classes;  // carrier index -> (e, class rep)
  Table class_index;                         // e x y -> carrier index of (e, [y]_e)

  int index_of(int e, int rep) const { return class_index[e][rep]; }
};

// Requires the matched pair of S (element-for-element) to be the pair of Y.
inline EmToAction to_action(const EmSet& y, std::shared_ptr<const LeftRestrictionMonoid> s) {
  validate_em_set_shape(y);
  auto fact = is_factorizable(*s);
  if (!fact.factorizable) throw Error(Errc::not_factorizable, "to_action requires a factorizable monoid");
  auto ex = from_lrm(*s, y.boolean_flag);
  bool same_cong = ex.pair.cong.size() == y.pair->cong.size();
  for (size_t e = 0; same_cong && e < ex.pair.cong.size(); ++e)
    same_cong = ex.pair.cong[e].block == y.pair->cong[e].block;
  if (ex.pair.E.meet.mult != y.pair->E.meet.mult || ex.pair.M.mult != y.pair->M.mult ||
      ex.pair.act != y.pair->act || !same_cong)
    throw Error(Errc::precondition, "the em_set pair is not the matched pair of the monoid");
  if (y.boolean_flag && y.carrier == 0)
    throw Error(Errc::precondition, "Boolean em_sets must be nonempty");

  EmToAction out;
  SupportedAction& a = out.action;
  a.S = std::move(s);
  a.boolean_mode = y.boolean_flag;
  if (a.boolean_mode) a.ctx = std::make_shared<const BooleanContext>(require_boolean(*a.S));
  int ne = y.pair->e_size();
  out.class_index.assign(ne, std::vector<int>(std::max(y.carrier, 1), -1));
  for (int e = 0; e < ne; ++e)
    for (int r : y.eq[e].representatives()) {
      int idx = static_cast<int>(out.classes.size());
      out.classes.emplace_back(e, r);
      a.support.push_back(ex.proj_elements[e]);
      a.labels.push_back("[" + std::to_string(r) + "]e" + std::to_string(e));
      for (int v = 0; v < y.carrier; ++v)
        if (y.eq[e].block[v] == r) out.class_index[e][v] = idx;
    }
  a.carrier = static_cast<int>(out.classes.size());
  if (a.carrier > kMaxElements) throw Error(Errc::size_cap, "induced action exceeds the element cap");

  const LeftRestrictionMonoid& lrm = *a.S;
  a.act.assign(lrm.size(), std::vector<int>(std::max(a.carrier, 1), 0));
  for (int u = 0; u < lrm.size(); ++u) {
    int cover = *least_total_above(lrm, u);
    int mu = ex.m_index[cover];
    for (int i = 0; i < a.carrier; ++i) {
      auto [e, r] = out.classes[i];
      int target_e = ex.e_index[lrm.plus_of(lrm.mul(u, ex.proj_elements[e]))];
      a.act[u][i] = out.class_index[target_e][y.apply(mu, r)];
    }
  }
  return out;
}

// The isomorphism X -> to_action(from_action(X)): x |-> [x']_{p(x)} for any
// top-fiber x' above x.
struct ActionRoundTrip {
  ActionToEm em;
  EmToAction back;
  std::vector<int> theta;
};

inline ActionRoundTrip roundtrip_action_iso(const SupportedAction& a) {
  ActionRoundTrip out;
  out.em = from_action(a);
  out.back = to_action(out.em.em, a.S);
  out.theta.assign(a.carrier, -1);
  for (int x = 0; x < a.carrier; ++x) {
    int e = out.em.extracted.e_index[a.support[x]];
    for (size_t i = 0; i < out.em.top_elts.size(); ++i)
      if (action_leq(a, x, out.em.top_elts[i])) {
        out.theta[x] = out.back.index_of(e, out.em.em.eq[e].block[static_cast<int>(i)]);
        break;
      }
    if (out.theta[x] < 0) throw Error(Errc::not_factorizable, "no top-fiber element above a carrier point");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and their transport along the two functors.

inline HomCheck check_em_hom(const EmSet& y, const EmSet& y2, const std::vector<int>& alpha) {
  if (y.pair->E.meet.mult != y2.pair->E.meet.mult || y.pair->M.mult != y2.pair->M.mult)
    throw Error(Errc::precondition, "em hom requires sets over one matched pair");
  validate_vector(alpha, y.carrier, std::max(y2.carrier, 1), "em hom map");
  HomCheck out;
  for (int m = 0; m < y.pair->m_size(); ++m)
    for (int x = 0; x < y.carrier; ++x)
      if (alpha[y.apply(m, x)] != y2.apply(m, alpha[x])) {
        out.ok = false;
        out.condition = "equivariant";
        out.witness = {m, x};
        return out;
      }
  for (int e = 0; e < y.pair->e_size(); ++e)
    for (int x = 0; x < y.carrier; ++x)
      for (int z = 0; z < y.carrier; ++z)
        if (y.same(e, x, z) && !y2.same(e, alpha[x], alpha[z])) {
          out.ok = false;
          out.condition = "congruence";
          out.witness = {e, x, z};
          return out;
        }
  return out;
}

// Restriction of an action hom to the top fibers.
inline std::vector<int> action_hom_to_em_hom(const ActionToEm& src, const ActionToEm& dst,
                                             const std::vector<int>& theta) {
  std::vector<int> alpha(src.em.carrier);
  for (int i = 0; i < src.em.carrier; ++i) {
    int img = dst.top_pos[theta[src.top_elts[i]]];
    if (img < 0) throw Error(Errc::precondition, "hom does not preserve the top fiber");
    alpha[i] = img;
  }
  return alpha;
}

// The induced map on class carriers: [y]_e -> [alpha(y)]_e.
inline std::vector<int> em_hom_to_action_hom(const EmToAction& src, const EmToAction& dst,
                                             const std::vector<int>& alpha) {
  std::vector<int> theta(src.action.carrier);
  for (int i = 0; i < src.action.carrier; ++i) {
    auto [e, r] = src.classes[i];
    theta[i] = dst.index_of(e, alpha[r]);
  }
  return theta;
}

// All [E|M]-set homomorphisms, by orbit-propagating search.
inline std::vector<std::vector<int>> enumerate_em_homs(const EmSet& y, const EmSet& y2,
                                                       const SearchLimit& limit = {}) {
  if (y.pair->E.meet.mult != y2.pair->E.meet.mult || y.pair->M.mult != y2.pair->M.mult)
    throw Error(Errc::precondition, "em hom enumeration requires sets over one matched pair");
  int nm = y.pair->m_size();
  std::vector<int> alpha(y.carrier, -1);
  std::vector<int> trail;
  std::vector<std::vector<int>> result;

  auto assign = [&](int x0, int v0) -> bool {
    std::vector<std::pair<int, int>> stack{{x0, v0}};
    while (!stack.empty()) {
      auto [x, v] = stack.back();
      stack.pop_back();
      if (alpha[x] == v) continue;
      if (alpha[x] >= 0) return false;
      limit.charge();
      alpha[x] = v;
      trail.push_back(x);
      for (int m = 0; m < nm; ++m) stack.emplace_back(y.apply(m, x), y2.apply(m, v));
    }
    return true;
  };

  auto congruence_ok = [&]() {
    for (int e = 0; e < y.pair->e_size(); ++e)
      for (int x = 0; x < y.carrier; ++x)
        for (int z = 0; z < y.carrier; ++z)
          if (y.same(e, x, z) && !y2.same(e, alpha[x], alpha[z])) return false;
    return true;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    while (pos < y.carrier && alpha[pos] >= 0) ++pos;
    if (pos == y.carrier) {
      if (congruence_ok()) result.push_back(alpha);
      return;
    }
    for (int v = 0; v < y2.carrier; ++v) {
      size_t mark = trail.size();
      if (assign(pos, v)) self(self, pos + 1);
      while (trail.size() > mark) {
        alpha[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Transport of exponential points.
//
// Over a Boolean S, the top fiber of Y^X is hom(S box X, Y); restriction to
// arguments (m, x) with m total and x in the top fiber is a bijection onto
// the maps M x X_1 -> Y_1 that are equivariant and preserve the pair
// congruences ((m,x) ~e (n,x') iff em = en and e.x = e.x').

inline std::vector<int> restrict_exponential_point(const Exponential& exp, const SupportedAction& a,
                                                   int point, const ExtractedPair& ex,
                                                   const std::vector<int>& x1,
                                                   const std::vector<int>& y1_pos) {
  int f = exp.fiber_of[point];
  if (exp.proj[f] != a.S->identity())
    throw Error(Errc::precondition, "not a top-fiber exponential point");
  int nm = static_cast<int>(ex.total_elements.size());
  std::vector<int> out(nm * x1.size());
  for (int m = 0; m < nm; ++m)
    for (size_t i = 0; i < x1.size(); ++i) {
      int t = ex.total_elements[m];
      int p = exp.dom[f].pair_index[exp.principal[f].index_of[t]][x1[i]];
      if (p < 0) fail_structural("total element missing from the top fiber domain");
      int value = y1_pos[exp.table_of[point][p]];
      if (value < 0) fail_structural("restricted value escapes the top fiber of Y");
      out[m * x1.size() + i] = value;
    }
  return out;
}

// Admissibility of phi' : M x X_1 -> Y_1 (positions into x1/y1 lists):
// equivariance m.(n,x) = (mn, m.x) and preservation of the componentwise
// congruences at every e.
inline bool admissible_point_table(const std::vector<int>& phi, const SupportedAction& a,
                                   const ExtractedPair& ex, const std::vector<int>& x1,
                                   const std::vector<int>& y1, const SupportedAction& b) {
  int nm = static_cast<int>(ex.total_elements.size());
  int kx = static_cast<int>(x1.size());
  std::vector<int> x1_pos(a.carrier, -1);
  for (int i = 0; i < kx; ++i) x1_pos[x1[i]] = i;
  std::vector<int> y1_pos(b.carrier, -1);
  for (size_t i = 0; i < y1.size(); ++i) y1_pos[y1[i]] = static_cast<int>(i);

  // Equivariance: phi(mn, m.x) = m . phi(n, x).
  for (int m = 0; m < nm; ++m)
    for (int n = 0; n < nm; ++n)
      for (int i = 0; i < kx; ++i) {
        int mn = ex.m_index[a.S->mul(ex.total_elements[m], ex.total_elements[n])];
        int mx = x1_pos[a.apply(ex.total_elements[m], x1[i])];
        if (mn < 0 || mx < 0) return false;
        int lhs = phi[mn * kx + mx];
        int rhs = y1_pos[b.apply(ex.total_elements[m], y1[phi[n * kx + i]])];
        if (rhs < 0 || lhs != rhs) return false;
      }
  for (int e = 0; e < static_cast<int>(ex.proj_elements.size()); ++e) {
    int pe = ex.proj_elements[e];
    for (int m = 0; m < nm; ++m)
      for (int n = 0; n < nm; ++n) {
        if (a.S->mul(pe, ex.total_elements[m]) != a.S->mul(pe, ex.total_elements[n])) continue;
        for (int i = 0; i < kx; ++i)
          for (int j = 0; j < kx; ++j) {
            if (a.apply(pe, x1[i]) != a.apply(pe, x1[j])) continue;
            if (b.apply(pe, y1[phi[m * kx + i]]) != b.apply(pe, y1[phi[n * kx + j]])) return false;
          }
      }
  }
  return true;
}

// Extension of an admissible table back to a hom S box X -> Y:
// phi(s, x) = s+ . phi'(s^, x') with s^ the least total above s and x' the
// least top-fiber element above x.
inline std::vector<int> extend_point_table(const std::vector<int>& phi, const Exponential& exp,
                                           const SupportedAction& a, const SupportedAction& b,
                                           const ExtractedPair& ex, const std::vector<int>& x1,
                                           const std::vector<int>& y1) {
  if (!admissible_point_table(phi, a, ex, x1, y1, b))
    throw Error(Errc::precondition, "table is not admissible");
  const LeftRestrictionMonoid& s = *a.S;
  int top_fiber = -1;
  for (size_t f = 0; f < exp.proj.size(); ++f)
    if (exp.proj[f] == s.identity()) top_fiber = static_cast<int>(f);
  if (top_fiber < 0) fail_structural("no top fiber in the exponential");
  int kx = static_cast<int>(x1.size());
  std::vector<int> x1_pos(a.carrier, -1);
  for (int i = 0; i < kx; ++i) x1_pos[x1[i]] = i;

  const auto& dom = exp.dom[top_fiber];
  std::vector<int> table(dom.pairs.size());
  for (size_t q = 0; q < dom.pairs.size(); ++q) {
    auto [ti, x] = dom.pairs[q];
    int t = exp.principal[top_fiber].elements[ti];
    int cover = *least_total_above(s, t);
    int xprime = -1;
    for (int i = 0; i < kx; ++i)
      if (action_leq(a, x, x1[i])) { xprime = i; break; }
    if (xprime < 0) throw Error(Errc::not_factorizable, "no top-fiber element above the argument");
    int value = y1[phi[ex.m_index[cover] * kx + xprime]];
    table[q] = b.apply(s.plus_of(t), value);
  }
  return table;
}

}  // namespace finrest
