#pragma once

// Supported actions of a left restriction monoid S: a carrier X, an action
// table S x X -> X and a support map p : X -> Proj(S) with
//   (E1) p(x).x = x           (E2) p(s.x) = (s p(x))+.
// Over a Boolean S a nonempty action must further satisfy (E3)-(E7): a fixed
// minimum, 0.x = z, joins of compatible pairs with support joins, and
// distributivity of the action over joins on both sides.
//
// The category of supported actions is Cartesian closed; this header builds
// the terminal object, binary (box) products, exponentials, currying and
// evaluation, and enumerates hom-sets exhaustively with support-fiber and
// orbit propagation pruning.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finrest/core.hpp"
#include "finrest/report.hpp"
#include "finrest/restriction.hpp"

namespace finrest {

struct SupportedAction {
  std::shared_ptr<const LeftRestrictionMonoid> S;
  int carrier = 0;
  Table act;                 // |S| x carrier
  std::vector<int> support;  // carrier -> S element (a projection)
  bool boolean_mode = false;
  std::shared_ptr<const BooleanContext> ctx;  // present when boolean_mode
  std::vector<std::string> labels;            // optional, for constructed carriers

  int apply(int s, int x) const { return act[s][x]; }
};

inline void validate_action_shape(const SupportedAction& a) {
  if (!a.S) fail_structural("action: missing monoid");
  validate_lrm_shape(*a.S);
  if (a.carrier < 0 || a.carrier > kMaxElements) throw Error(Errc::size_cap, "action carrier out of range");
  validate_table(a.act, a.S->size(), a.carrier, std::max(a.carrier, 1), "action table");
  validate_vector(a.support, a.carrier, a.S->size(), "action support");
}

inline bool same_monoid(const SupportedAction& a, const SupportedAction& b) {
  if (a.S == b.S) return true;
  return a.S && b.S && a.S->monoid.mult == b.S->monoid.mult && a.S->plus == b.S->plus &&
         a.S->monoid.identity == b.S->monoid.identity && a.S->zero == b.S->zero;
}

inline std::shared_ptr<const BooleanContext> action_ctx(const SupportedAction& a) {
  if (a.ctx) return a.ctx;
  return std::make_shared<const BooleanContext>(require_boolean(*a.S));
}

// x <= y iff x = p(x).y, and x ~ y iff p(x).y = p(y).x.
inline bool action_leq(const SupportedAction& a, int x, int y) {
  return a.apply(a.support[x], y) == x;
}

inline bool action_compat(const SupportedAction& a, int x, int y) {
  return a.apply(a.support[x], y) == a.apply(a.support[y], x);
}

// Precomputed order data: the partial order, pairwise joins, the minimum.
struct ActionOrder {
  std::vector<std::vector<char>> leq;
  Table join;  // -1 where no least upper bound exists
  int minimum = -1;

  std::optional<int> join_of(int x, int y) const {
    return join[x][y] < 0 ? std::nullopt : std::optional<int>(join[x][y]);
  }
};

inline ActionOrder make_action_order(const SupportedAction& a) {
  ActionOrder o;
  int k = a.carrier;
  o.leq.assign(k, std::vector<char>(k, 0));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) o.leq[x][y] = action_leq(a, x, y);
  o.join.assign(k, std::vector<int>(k, -1));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      std::vector<int> ub;
      for (int u = 0; u < k; ++u)
        if (o.leq[x][u] && o.leq[y][u]) ub.push_back(u);
      for (int u : ub) {
        bool least = true;
        for (int v : ub)
          if (!o.leq[u][v]) { least = false; break; }
        if (least) { o.join[x][y] = u; break; }
      }
    }
  for (int z = 0; z < k; ++z) {
    bool least = true;
    for (int y = 0; y < k; ++y)
      if (!o.leq[z][y]) { least = false; break; }
    if (least) { o.minimum = z; break; }
  }
  return o;
}

// The support fiber X_e and the presheaf restriction X_e -> X_f for f <= e.
inline std::vector<int> fiber(const SupportedAction& a, int e) {
  std::vector<int> out;
  for (int x = 0; x < a.carrier; ++x)
    if (a.support[x] == e) out.push_back(x);
  return out;
}

inline std::vector<int> restriction_map(const SupportedAction& a, int e, int f) {
  if (!natural_leq(*a.S, f, e)) throw Error(Errc::precondition, "restriction map requires f <= e");
  std::vector<int> out;
  for (int x : fiber(a, e)) out.push_back(a.apply(f, x));
  return out;
}

struct ActionFactorizable {
  bool factorizable = true;
  int witness = -1;
};

inline ActionFactorizable is_factorizable_action(const SupportedAction& a) {
  ActionFactorizable r;
  int one = a.S->identity();
  for (int y = 0; y < a.carrier; ++y) {
    bool found = false;
    for (int x = 0; x < a.carrier; ++x)
      if (a.support[x] == one && action_leq(a, y, x)) { found = true; break; }
    if (!found) {
      r.factorizable = false;
      r.witness = y;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Axiom suites.

inline std::vector<NamedAxiom> supported_axioms(const SupportedAction& a) {
  int n = a.S->size(), k = a.carrier;
  const LeftRestrictionMonoid& s = *a.S;
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("action_identity", {k}, [&a, &s](const std::vector<int>& t) {
    return a.apply(s.identity(), t[0]) != t[0];
  }));
  axs.push_back(make_axiom("action_composition", {n, n, k}, [&a, &s](const std::vector<int>& t) {
    return a.apply(s.mul(t[0], t[1]), t[2]) != a.apply(t[0], a.apply(t[1], t[2]));
  }));
  axs.push_back(make_axiom("support_projection", {k}, [&a, &s](const std::vector<int>& t) {
    return !s.is_projection(a.support[t[0]]);
  }));
  axs.push_back(make_axiom("E1", {k}, [&a](const std::vector<int>& t) {
    return a.apply(a.support[t[0]], t[0]) != t[0];
  }));
  axs.push_back(make_axiom("E2", {n, k}, [&a, &s](const std::vector<int>& t) {
    return a.support[a.apply(t[0], t[1])] != s.plus_of(s.mul(t[0], a.support[t[1]]));
  }));
  return axs;
}

inline AxiomReport check_supported(const SupportedAction& a, const std::string& name = "action") {
  validate_action_shape(a);
  return run_axioms(name, supported_axioms(a));
}

// The returned predicates reference the action itself (which the caller
// keeps alive) but own shared copies of the derived order and context, so
// the suite may outlive this call.
inline std::vector<NamedAxiom> boolean_supported_axioms(const SupportedAction& a,
                                                        const BooleanContext& ctx_in,
                                                        const ActionOrder& ord_in) {
  int n = a.S->size(), k = a.carrier;
  auto ctx = std::make_shared<const BooleanContext>(ctx_in);
  auto ord = std::make_shared<const ActionOrder>(ord_in);
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("E3.lower_bounds", {k, k}, [ord, k](const std::vector<int>& t) {
    for (int z = 0; z < k; ++z)
      if (ord->leq[z][t[0]] && ord->leq[z][t[1]]) return false;
    return true;
  }));
  axs.push_back(make_axiom("E3.minimum", {1}, [ord](const std::vector<int>&) {
    return ord->minimum < 0;
  }));
  axs.push_back(make_axiom("E3.zero_fixpoint", {n}, [&a, ord](const std::vector<int>& t) {
    return ord->minimum < 0 || a.apply(t[0], ord->minimum) != ord->minimum;
  }));
  axs.push_back(make_axiom("E4", {k}, [&a, ord](const std::vector<int>& t) {
    return ord->minimum < 0 || a.apply(*a.S->zero, t[0]) != ord->minimum;
  }));
  axs.push_back(make_axiom("E5", {k, k}, [&a, ctx, ord](const std::vector<int>& t) {
    int x = t[0], y = t[1];
    if (!action_compat(a, x, y)) return false;
    int j = ord->join[x][y];
    if (j < 0) return true;
    int sj = ctx->join[a.support[x]][a.support[y]];
    return sj < 0 || a.support[j] != sj;
  }));
  axs.push_back(make_axiom("E6", {n, k, k}, [&a, ord](const std::vector<int>& t) {
    int u = t[0], x = t[1], y = t[2];
    if (!action_compat(a, x, y)) return false;
    int j = ord->join[x][y];
    if (j < 0) return true;
    int rhs = ord->join[a.apply(u, x)][a.apply(u, y)];
    return rhs < 0 || a.apply(u, j) != rhs;
  }));
  axs.push_back(make_axiom("E7", {n, n, k}, [&a, ctx, ord](const std::vector<int>& t) {
    int u = t[0], v = t[1], x = t[2];
    if (!right_compatible(*a.S, u, v)) return false;
    int j = ctx->join[u][v];
    if (j < 0) return true;
    int rhs = ord->join[a.apply(u, x)][a.apply(v, x)];
    return rhs < 0 || a.apply(j, x) != rhs;
  }));
  return axs;
}

inline AxiomReport check_boolean_supported(const SupportedAction& a, const std::string& name = "boolean_action") {
  validate_action_shape(a);
  if (a.carrier == 0) throw Error(Errc::precondition, "Boolean supported actions must be nonempty");
  auto ctx = action_ctx(a);
  auto ord = make_action_order(a);
  return run_axioms(name, boolean_supported_axioms(a, *ctx, ord));
}

// ---------------------------------------------------------------------------
// The terminal object and principal actions.

// Proj(S) with s.e = (se)+ and the identity support: the terminal object.
inline SupportedAction projection_action(std::shared_ptr<const LeftRestrictionMonoid> s,
                                         bool boolean_mode = false,
                                         std::shared_ptr<const BooleanContext> ctx = nullptr) {
  SupportedAction a;
  a.S = std::move(s);
  a.boolean_mode = boolean_mode;
  auto proj = projections(*a.S);
  a.carrier = static_cast<int>(proj.size());
  a.support = proj;
  a.act.assign(a.S->size(), std::vector<int>(a.carrier, 0));
  std::vector<int> pos(a.S->size(), -1);
  for (int i = 0; i < a.carrier; ++i) pos[proj[i]] = i;
  for (int u = 0; u < a.S->size(); ++u)
    for (int i = 0; i < a.carrier; ++i)
      a.act[u][i] = pos[a.S->plus_of(a.S->mul(u, proj[i]))];
  for (int e : proj) a.labels.push_back("e" + std::to_string(e));
  if (boolean_mode) a.ctx = ctx ? std::move(ctx) : action_ctx(a);
  return a;
}

// The principal left ideal Se with action by multiplication and support s+.
struct PrincipalAction {
  SupportedAction action;
  std::vector<int> elements;  // carrier index -> S element
  std::vector<int> index_of;  // S element -> carrier index or -1
};

inline PrincipalAction principal_action(std::shared_ptr<const LeftRestrictionMonoid> s, int e,
                                        bool boolean_mode = false,
                                        std::shared_ptr<const BooleanContext> ctx = nullptr) {
  if (!s->is_projection(e)) throw Error(Errc::precondition, "principal action requires a projection");
  PrincipalAction out;
  SupportedAction& a = out.action;
  a.S = std::move(s);
  a.boolean_mode = boolean_mode;
  out.index_of.assign(a.S->size(), -1);
  for (int x = 0; x < a.S->size(); ++x)
    if (a.S->mul(x, e) == x) {
      out.index_of[x] = static_cast<int>(out.elements.size());
      out.elements.push_back(x);
    }
  a.carrier = static_cast<int>(out.elements.size());
  a.act.assign(a.S->size(), std::vector<int>(a.carrier, 0));
  a.support.resize(a.carrier);
  for (int i = 0; i < a.carrier; ++i) {
    a.support[i] = a.S->plus_of(out.elements[i]);
    a.labels.push_back("s" + std::to_string(out.elements[i]));
  }
  for (int u = 0; u < a.S->size(); ++u)
    for (int i = 0; i < a.carrier; ++i) {
      int m = out.index_of[a.S->mul(u, out.elements[i])];
      if (m < 0) fail_structural("principal carrier not closed under the action");
      a.act[u][i] = m;
    }
  if (boolean_mode) a.ctx = ctx ? std::move(ctx) : action_ctx(a);
  return out;
}

// ---------------------------------------------------------------------------
// Box products.

struct BoxProduct {
  SupportedAction action;
  std::vector<std::pair<int, int>> pairs;  // carrier index -> (x in A, y in B)
  Table pair_index;                        // |A| x |B| -> carrier index or -1

  int index_of(int x, int y) const { return pair_index[x][y]; }
};

inline BoxProduct box_product(const SupportedAction& a, const SupportedAction& b) {
  if (!same_monoid(a, b)) throw Error(Errc::precondition, "box product requires actions of one monoid");
  if (a.boolean_mode != b.boolean_mode)
    throw Error(Errc::precondition, "box product requires matching Boolean modes");
  BoxProduct out;
  SupportedAction& r = out.action;
  r.S = a.S;
  r.boolean_mode = a.boolean_mode;
  r.ctx = a.ctx ? a.ctx : b.ctx;
  out.pair_index.assign(std::max(a.carrier, 1), std::vector<int>(std::max(b.carrier, 1), -1));
  for (int x = 0; x < a.carrier; ++x)
    for (int y = 0; y < b.carrier; ++y) {
      if (a.support[x] != b.support[y]) continue;
      out.pair_index[x][y] = static_cast<int>(out.pairs.size());
      out.pairs.emplace_back(x, y);
      r.support.push_back(a.support[x]);
      r.labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  r.carrier = static_cast<int>(out.pairs.size());
  r.act.assign(r.S->size(), std::vector<int>(r.carrier, 0));
  for (int u = 0; u < r.S->size(); ++u)
    for (int i = 0; i < r.carrier; ++i) {
      auto [x, y] = out.pairs[i];
      int m = out.pair_index[a.apply(u, x)][b.apply(u, y)];
      if (m < 0) fail_structural("box carrier not closed under the action");
      r.act[u][i] = m;
    }
  return out;
}

// Pairing W -> A box B of two homs out of W; total by the support condition.
inline std::vector<int> pair_into_box(const BoxProduct& box, const std::vector<int>& f,
                                      const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t w = 0; w < f.size(); ++w) {
    int idx = box.pair_index[f[w]][g[w]];
    if (idx < 0) throw Error(Errc::precondition, "pairing has mismatched supports");
    out[w] = idx;
  }
  return out;
}

inline std::vector<int> compose_homs(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms.

inline HomCheck check_action_hom(const SupportedAction& a, const SupportedAction& b,
                                 const std::vector<int>& theta) {
  if (!same_monoid(a, b)) throw Error(Errc::precondition, "hom check requires actions of one monoid");
  validate_vector(theta, a.carrier, std::max(b.carrier, 1), "action hom map");
  HomCheck out;
  auto fail = [&out](const std::string& cond, std::vector<int> w) {
    out.ok = false;
    out.condition = cond;
    out.witness = std::move(w);
  };
  for (int x = 0; x < a.carrier; ++x)
    if (b.support[theta[x]] != a.support[x]) {
      fail("support", {x});
      return out;
    }
  for (int u = 0; u < a.S->size(); ++u)
    for (int x = 0; x < a.carrier; ++x)
      if (theta[a.apply(u, x)] != b.apply(u, theta[x])) {
        fail("equivariant", {u, x});
        return out;
      }
  if (a.boolean_mode && b.boolean_mode && a.carrier > 0) {
    auto oa = make_action_order(a);
    auto ob = make_action_order(b);
    if (oa.minimum < 0 || ob.minimum < 0 || theta[oa.minimum] != ob.minimum) {
      fail("minimum", {oa.minimum});
      return out;
    }
    for (int x = 0; x < a.carrier; ++x)
      for (int y = 0; y < a.carrier; ++y) {
        if (!action_compat(a, x, y) || oa.join[x][y] < 0) continue;
        int jb = ob.join[theta[x]][theta[y]];
        if (jb < 0 || theta[oa.join[x][y]] != jb) {
          fail("join", {x, y});
          return out;
        }
      }
  }
  return out;
}

// Bijective hom whose inverse is a hom.
inline HomCheck check_action_iso(const SupportedAction& a, const SupportedAction& b,
                                 const std::vector<int>& theta) {
  HomCheck out;
  if (a.carrier != b.carrier) {
    out.ok = false;
    out.condition = "size";
    return out;
  }
  std::vector<int> inverse(b.carrier, -1);
  for (int x = 0; x < a.carrier; ++x) {
    if (inverse[theta[x]] >= 0) {
      out.ok = false;
      out.condition = "bijective";
      out.witness = {x};
      return out;
    }
    inverse[theta[x]] = x;
  }
  out = check_action_hom(a, b, theta);
  if (!out.ok) return out;
  out = check_action_hom(b, a, inverse);
  if (!out.ok) out.condition = "inverse_" + out.condition;
  return out;
}

// Exhaustive hom-set enumeration. Support fibers prune the candidates and
// each tentative assignment is propagated through the S-orbit; in Boolean
// mode minimum and join preservation are checked on the completed maps.
// Results are sorted lexicographically.
inline std::vector<std::vector<int>> enumerate_homs(const SupportedAction& a, const SupportedAction& b,
                                                    const SearchLimit& limit = {}) {
  if (!same_monoid(a, b)) throw Error(Errc::precondition, "hom enumeration requires actions of one monoid");
  if (a.boolean_mode != b.boolean_mode)
    throw Error(Errc::precondition, "hom enumeration requires matching Boolean modes");
  int n = a.S->size();
  std::vector<std::vector<int>> cand(a.carrier);
  for (int x = 0; x < a.carrier; ++x)
    for (int y = 0; y < b.carrier; ++y)
      if (b.support[y] == a.support[x]) cand[x].push_back(y);

  std::optional<ActionOrder> oa, ob;
  if (a.boolean_mode) {
    oa = make_action_order(a);
    ob = make_action_order(b);
    if (a.carrier > 0 && (oa->minimum < 0 || ob->minimum < 0))
      throw Error(Errc::precondition, "Boolean hom enumeration requires minima on both sides");
  }

  std::vector<int> theta(a.carrier, -1);
  std::vector<int> trail;
  std::vector<std::vector<int>> result;

  auto assign = [&](int x0, int y0) -> bool {
    std::vector<std::pair<int, int>> stack{{x0, y0}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (theta[x] == y) continue;
      if (theta[x] >= 0) return false;
      limit.charge();
      if (b.support[y] != a.support[x]) return false;
      theta[x] = y;
      trail.push_back(x);
      for (int u = 0; u < n; ++u) stack.emplace_back(a.apply(u, x), b.apply(u, y));
    }
    return true;
  };

  auto emit = [&]() {
    if (a.boolean_mode && a.carrier > 0) {
      if (theta[oa->minimum] != ob->minimum) return;
      for (int x = 0; x < a.carrier; ++x)
        for (int y = 0; y < a.carrier; ++y) {
          if (oa->join[x][y] < 0 || !action_compat(a, x, y)) continue;
          int jb = ob->join[theta[x]][theta[y]];
          if (jb < 0 || theta[oa->join[x][y]] != jb) return;
        }
    }
    result.push_back(theta);
  };

  auto rec = [&](auto&& self, int pos) -> void {
    while (pos < a.carrier && theta[pos] >= 0) ++pos;
    if (pos == a.carrier) {
      emit();
      return;
    }
    for (int y : cand[pos]) {
      size_t mark = trail.size();
      if (assign(pos, y)) self(self, pos + 1);
      while (trail.size() > mark) {
        theta[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// Exponentials.
//
// Y^X is the disjoint union over projections e of hom(Se box X, Y), with
// support e on the e-fiber and action (a.theta)(t, x) = theta(ta, (ta)+.x).

struct Exponential {
  SupportedAction action;
  std::vector<int> proj;                   // fiber -> projection element of S
  std::vector<PrincipalAction> principal;  // per fiber
  std::vector<BoxProduct> dom;             // per fiber: principal[f] box A
  std::vector<int> fiber_of;               // carrier index -> fiber
  std::vector<std::vector<int>> table_of;  // carrier index -> values on dom[fiber]
  std::map<std::pair<int, std::vector<int>>, int> index;

  int find(int f, const std::vector<int>& table) const {
    auto it = index.find({f, table});
    return it == index.end() ? -1 : it->second;
  }
};

inline Exponential exponential(const SupportedAction& a, const SupportedAction& b,
                               const SearchLimit& limit = {}) {
  if (!same_monoid(a, b)) throw Error(Errc::precondition, "exponential requires actions of one monoid");
  if (a.boolean_mode != b.boolean_mode)
    throw Error(Errc::precondition, "exponential requires matching Boolean modes");
  Exponential out;
  SupportedAction& e = out.action;
  e.S = a.S;
  e.boolean_mode = a.boolean_mode;
  e.ctx = a.ctx ? a.ctx : b.ctx;
  out.proj = projections(*a.S);
  int nf = static_cast<int>(out.proj.size());
  for (int f = 0; f < nf; ++f) {
    out.principal.push_back(principal_action(a.S, out.proj[f], a.boolean_mode, e.ctx));
    out.dom.push_back(box_product(out.principal.back().action, a));
    for (const auto& hom : enumerate_homs(out.dom.back().action, b, limit)) {
      int idx = static_cast<int>(out.table_of.size());
      out.fiber_of.push_back(f);
      out.table_of.push_back(hom);
      out.index[{f, hom}] = idx;
      e.support.push_back(out.proj[f]);
      e.labels.push_back("f" + std::to_string(out.proj[f]) + "#" + std::to_string(idx));
    }
  }
  e.carrier = static_cast<int>(out.table_of.size());
  if (e.carrier > kMaxElements) throw Error(Errc::size_cap, "exponential carrier exceeds the element cap");

  e.act.assign(e.S->size(), std::vector<int>(std::max(e.carrier, 1), 0));
  const LeftRestrictionMonoid& s = *e.S;
  for (int u = 0; u < s.size(); ++u)
    for (int i = 0; i < e.carrier; ++i) {
      int f = out.fiber_of[i];
      int g = -1;  // target fiber: (u e)+
      int ge = s.plus_of(s.mul(u, out.proj[f]));
      for (int ff = 0; ff < nf; ++ff)
        if (out.proj[ff] == ge) { g = ff; break; }
      const auto& dsrc = out.dom[f];
      const auto& dsrc_prin = out.principal[f];
      const auto& ddst = out.dom[g];
      const auto& ddst_prin = out.principal[g];
      std::vector<int> table(ddst.pairs.size());
      for (size_t q = 0; q < ddst.pairs.size(); ++q) {
        auto [ti, x] = ddst.pairs[q];
        int t = ddst_prin.elements[ti];
        int tu = s.mul(t, u);
        int xx = a.apply(s.plus_of(tu), x);
        int p = dsrc.pair_index[dsrc_prin.index_of[tu]][xx];
        if (p < 0) fail_structural("exponential action fell outside the fiber domain");
        table[q] = out.table_of[i][p];
      }
      int idx = out.find(g, table);
      if (idx < 0)
        throw Error(Errc::precondition, "exponential action left the hom-set; the inputs are not valid actions");
      e.act[u][i] = idx;
    }
  return out;
}

// eval : Y^X box X -> Y, theta applied at its own fiber projection.
inline std::vector<int> eval_hom(const Exponential& exp, const BoxProduct& exp_box_a) {
  std::vector<int> out(exp_box_a.pairs.size());
  for (size_t i = 0; i < exp_box_a.pairs.size(); ++i) {
    auto [ti, x] = exp_box_a.pairs[i];
    int f = exp.fiber_of[ti];
    int p = exp.dom[f].pair_index[exp.principal[f].index_of[exp.proj[f]]][x];
    if (p < 0) fail_structural("eval argument outside the fiber domain");
    out[i] = exp.table_of[ti][p];
  }
  return out;
}

// curry : hom(Z box X, Y) -> hom(Z, Y^X) by g_hat(z)(t, x) = g(t.z, (t r(z))+.x).
inline std::vector<int> curry(const Exponential& exp, const SupportedAction& z,
                              const SupportedAction& a, const BoxProduct& z_box_a,
                              const std::vector<int>& g) {
  const LeftRestrictionMonoid& s = *z.S;
  int nf = static_cast<int>(exp.proj.size());
  std::vector<int> out(z.carrier);
  for (int zz = 0; zz < z.carrier; ++zz) {
    int e = z.support[zz];
    int f = -1;
    for (int ff = 0; ff < nf; ++ff)
      if (exp.proj[ff] == e) { f = ff; break; }
    if (f < 0) fail_structural("support of z is not a projection fiber");
    const auto& d = exp.dom[f];
    const auto& prin = exp.principal[f];
    std::vector<int> table(d.pairs.size());
    for (size_t q = 0; q < d.pairs.size(); ++q) {
      auto [ti, x] = d.pairs[q];
      int t = prin.elements[ti];
      int az = z.apply(t, zz);
      int xx = a.apply(s.plus_of(s.mul(t, e)), x);
      int p = z_box_a.pair_index[az][xx];
      if (p < 0) fail_structural("curry argument outside the box carrier");
      table[q] = g[p];
    }
    int idx = exp.find(f, table);
    if (idx < 0) throw Error(Errc::precondition, "curried map is not a fiber homomorphism; g is not a hom");
    out[zz] = idx;
  }
  return out;
}

// theta <= phi on the exponential viewed as partial functions on S box X:
// the fiber of theta is below the fiber of phi and the tables agree on the
// smaller domain.
inline bool exponential_subset(const Exponential& exp, int i, int j) {
  int fi = exp.fiber_of[i], fj = exp.fiber_of[j];
  const auto& s = *exp.action.S;
  if (!natural_leq(s, exp.proj[fi], exp.proj[fj])) return false;
  const auto& di = exp.dom[fi];
  const auto& dj = exp.dom[fj];
  for (size_t q = 0; q < di.pairs.size(); ++q) {
    auto [ti, x] = di.pairs[q];
    int t = exp.principal[fi].elements[ti];
    int p = dj.pair_index[exp.principal[fj].index_of[t]][x];
    if (p < 0) return false;
    if (exp.table_of[i][q] != exp.table_of[j][p]) return false;
  }
  return true;
}

}  // namespace finrest
