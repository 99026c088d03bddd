#pragma once

// Partial units, the Boolean inverse monoid Inv(S) they form, the etale
// property (every element is a right-compatible join of partial units), and
// the extension of supported Inv(S)-actions back to S-actions by
//   a . y = join over i of (a_i . y)
// for a stored decomposition a = join a_i into partial units. Over an etale
// monoid this makes the two categories of supported actions isomorphic.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "finrest/action.hpp"
#include "finrest/core.hpp"
#include "finrest/report.hpp"
#include "finrest/restriction.hpp"

namespace finrest {

struct PartialUnits {
  std::vector<int> elements;  // S-indices of partial units, increasing
  std::vector<int> witness;   // per S element: least b with ab = a+, ba = b+; -1 if none
};

inline PartialUnits partial_units(const LeftRestrictionMonoid& s) {
  validate_lrm_shape(s);
  PartialUnits out;
  out.witness.assign(s.size(), -1);
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b)
      if (s.mul(a, b) == s.plus_of(a) && s.mul(b, a) == s.plus_of(b)) {
        out.witness[a] = b;
        break;
      }
    if (out.witness[a] >= 0) out.elements.push_back(a);
  }
  return out;
}

// Inv(S) as a monoid in its own right, with the inverse map.
struct InvMonoid {
  std::shared_ptr<const LeftRestrictionMonoid> lrm;
  std::vector<int> elements;  // sub index -> S element
  std::vector<int> index_of;  // S element -> sub index or -1
  std::vector<int> inverse;   // sub index -> sub index
};

inline InvMonoid inv_monoid(const LeftRestrictionMonoid& s, const PartialUnits& units) {
  auto sub = induced_sub_lrm(s, units.elements);
  InvMonoid out;
  out.lrm = std::make_shared<const LeftRestrictionMonoid>(sub.lrm);
  out.elements = sub.elements;
  out.index_of = sub.index_of;
  out.inverse.resize(out.elements.size());
  for (size_t i = 0; i < out.elements.size(); ++i) {
    int w = units.witness[out.elements[i]];
    int wi = w < 0 ? -1 : out.index_of[w];
    if (wi < 0) fail_structural("inverse witness escapes the partial units");
    out.inverse[i] = wi;
  }
  return out;
}

// Full compatibility in the inverse monoid: both s't and st' idempotent.
inline bool fully_compatible(const InvMonoid& inv, int s, int t) {
  const auto& m = *inv.lrm;
  int u = m.mul(inv.inverse[s], t);
  int v = m.mul(s, inv.inverse[t]);
  return m.mul(u, u) == u && m.mul(v, v) == v;
}

// ---------------------------------------------------------------------------
// The etale property and decompositions.

struct EtaleResult {
  bool etale = true;
  int witness = -1;                             // element with no decomposition
  std::vector<std::vector<int>> decomposition;  // per S element: minimal unit set
};

// Units below a are pairwise right-compatible; fold their joins.
inline std::vector<int> units_below(const LeftRestrictionMonoid& s, const PartialUnits& units, int a) {
  std::vector<int> out;
  for (int u : units.elements)
    if (natural_leq(s, u, a)) out.push_back(u);
  return out;
}

inline int fold_join(const BooleanContext& ctx, const std::vector<int>& parts) {
  if (parts.empty()) return -1;
  int acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    if (acc < 0) return -1;
    acc = ctx.join[acc][parts[i]];
  }
  return acc;
}

// Minimal decomposition per element: fewest units, least-index tie break.
inline EtaleResult is_etale(const LeftRestrictionMonoid& s, const BooleanContext& ctx,
                            const PartialUnits& units, const SearchLimit& limit = {}) {
  EtaleResult out;
  out.decomposition.assign(s.size(), {});
  for (int a = 0; a < s.size(); ++a) {
    auto below = units_below(s, units, a);
    int nb = static_cast<int>(below.size());
    bool found = false;
    for (int k = 1; k <= nb && !found; ++k) {
      std::vector<int> pick(k);
      auto combos = [&](auto&& self, int start, int depth) -> bool {
        if (depth == k) {
          limit.charge();
          std::vector<int> parts;
          for (int i : pick) parts.push_back(below[i]);
          return fold_join(ctx, parts) == a;
        }
        for (int i = start; i <= nb - (k - depth); ++i) {
          pick[depth] = i;
          if (self(self, i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (combos(combos, 0, 0)) {
        for (int i : pick) out.decomposition[a].push_back(below[i]);
        found = true;
      }
    }
    if (!found) {
      out.etale = false;
      out.witness = a;
      out.decomposition[a].clear();
    }
  }
  return out;
}

// All decompositions of a into units below it (subsets with join a).
inline std::vector<std::vector<int>> all_decompositions(const LeftRestrictionMonoid& s,
                                                        const BooleanContext& ctx,
                                                        const PartialUnits& units, int a,
                                                        const SearchLimit& limit = {}) {
  auto below = units_below(s, units, a);
  int nb = static_cast<int>(below.size());
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << nb); ++mask) {
    limit.charge();
    std::vector<int> parts;
    for (int i = 0; i < nb; ++i)
      if ((mask >> i) & 1) parts.push_back(below[i]);
    if (fold_join(ctx, parts) == a) out.push_back(parts);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restriction of S-actions to Inv(S) and the axioms on the Inv side.

inline SupportedAction restrict_action(const InvMonoid& inv, const SupportedAction& a) {
  SupportedAction out;
  out.S = inv.lrm;
  out.boolean_mode = a.boolean_mode;
  out.carrier = a.carrier;
  out.labels = a.labels;
  out.act.assign(inv.lrm->size(), std::vector<int>(std::max(a.carrier, 1), 0));
  out.support.resize(a.carrier);
  for (int x = 0; x < a.carrier; ++x) {
    int sub = inv.index_of[a.support[x]];
    if (sub < 0) fail_structural("support escapes the partial units");
    out.support[x] = sub;
  }
  for (size_t u = 0; u < inv.elements.size(); ++u)
    for (int x = 0; x < a.carrier; ++x) out.act[u][x] = a.apply(inv.elements[u], x);
  return out;
}

// (E1)-(E6) as over a Boolean monoid, with (E7) quantified over fully
// compatible pairs of the inverse monoid.
inline AxiomReport check_inv_supported(const SupportedAction& a, const InvMonoid& inv,
                                       const std::string& name = "inv_action") {
  validate_action_shape(a);
  if (a.carrier == 0) throw Error(Errc::precondition, "supported Inv actions must be nonempty");
  auto ctx = make_boolean_context(*inv.lrm);  // joins are partial; projections complete
  auto ord = make_action_order(a);
  const LeftRestrictionMonoid& s = *inv.lrm;
  int n = s.size(), k = a.carrier;

  auto axs = supported_axioms(a);
  axs.push_back(make_axiom("E3.lower_bounds", {k, k}, [ord, k](const std::vector<int>& t) {
    for (int z = 0; z < k; ++z)
      if (ord.leq[z][t[0]] && ord.leq[z][t[1]]) return false;
    return true;
  }));
  axs.push_back(make_axiom("E3.minimum", {1}, [ord](const std::vector<int>&) {
    return ord.minimum < 0;
  }));
  axs.push_back(make_axiom("E3.zero_fixpoint", {n}, [&a, ord](const std::vector<int>& t) {
    return ord.minimum < 0 || a.apply(t[0], ord.minimum) != ord.minimum;
  }));
  axs.push_back(make_axiom("E4", {k}, [&a, &s, ord](const std::vector<int>& t) {
    return ord.minimum < 0 || a.apply(*s.zero, t[0]) != ord.minimum;
  }));
  axs.push_back(make_axiom("E5", {k, k}, [&a, ctx, ord](const std::vector<int>& t) {
    int x = t[0], y = t[1];
    if (!action_compat(a, x, y)) return false;
    int j = ord.join[x][y];
    if (j < 0) return true;
    int sj = ctx.join[a.support[x]][a.support[y]];
    return sj < 0 || a.support[j] != sj;
  }));
  axs.push_back(make_axiom("E6", {n, k, k}, [&a, ord](const std::vector<int>& t) {
    int u = t[0], x = t[1], y = t[2];
    if (!action_compat(a, x, y)) return false;
    int j = ord.join[x][y];
    if (j < 0) return true;
    int rhs = ord.join[a.apply(u, x)][a.apply(u, y)];
    return rhs < 0 || a.apply(u, j) != rhs;
  }));
  axs.push_back(make_axiom("E7.fully_compatible", {n, n, k}, [&a, &inv, ctx, ord](const std::vector<int>& t) {
    int u = t[0], v = t[1], x = t[2];
    if (!fully_compatible(inv, u, v)) return false;
    int j = ctx.join[u][v];
    if (j < 0) return true;
    int rhs = ord.join[a.apply(u, x)][a.apply(v, x)];
    return rhs < 0 || a.apply(j, x) != rhs;
  }));
  return run_axioms(name, axs);
}

// ---------------------------------------------------------------------------
// Extension of an Inv(S)-action to an S-action.

struct ExtensionResult {
  SupportedAction action;
  bool independent = true;  // the value agrees across all decompositions
  std::vector<int> dependence_witness;  // (a, y) on failure
};

inline ExtensionResult extend_action(const InvMonoid& inv, const SupportedAction& a_inv,
                                     std::shared_ptr<const LeftRestrictionMonoid> s,
                                     const BooleanContext& ctx, const EtaleResult& etale,
                                     const SearchLimit& limit = {}) {
  if (!etale.etale)
    throw Error(Errc::not_etale, "element " + std::to_string(etale.witness) + " has no unit decomposition");
  ExtensionResult out;
  SupportedAction& ext = out.action;
  ext.S = s;
  ext.boolean_mode = true;
  ext.ctx = std::make_shared<const BooleanContext>(ctx);
  ext.carrier = a_inv.carrier;
  ext.labels = a_inv.labels;
  ext.support.resize(a_inv.carrier);
  for (int x = 0; x < a_inv.carrier; ++x) ext.support[x] = inv.elements[a_inv.support[x]];
  auto ord = make_action_order(a_inv);

  auto value_for = [&](const std::vector<int>& parts, int y) -> int {
    int acc = -1;
    for (int u : parts) {
      int v = a_inv.apply(inv.index_of[u], y);
      acc = acc < 0 ? v : ord.join[acc][v];
      if (acc < 0) return -1;
    }
    return acc;
  };

  int n = s->size();
  ext.act.assign(n, std::vector<int>(std::max(ext.carrier, 1), 0));
  for (int a = 0; a < n; ++a) {
    const auto& parts = etale.decomposition[a];
    for (int y = 0; y < ext.carrier; ++y) {
      int v = value_for(parts, y);
      if (v < 0)
        throw Error(Errc::no_join, "join of unit translates does not exist in the carrier");
      ext.act[a][y] = v;
    }
  }

  // Independence across every decomposition, at desk scale.
  PartialUnits units;
  units.elements = inv.elements;
  units.witness.assign(s->size(), -1);
  for (size_t i = 0; i < inv.elements.size(); ++i)
    units.witness[inv.elements[i]] = inv.elements[inv.inverse[i]];
  for (int a = 0; a < n && out.independent; ++a) {
    auto decs = all_decompositions(*s, ctx, units, a, limit);
    for (const auto& d : decs) {
      for (int y = 0; y < ext.carrier; ++y) {
        int v = value_for(d, y);
        if (v != ext.act[a][y]) {
          out.independent = false;
          out.dependence_witness = {a, y};
          break;
        }
      }
      if (!out.independent) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The category isomorphism, verified extensionally on fixture actions.

struct CategoryIsoReport {
  bool ok = true;
  bool vacuous = false;
  std::vector<std::string> lines;
};

// Default fixtures: the projection action and every principal action.
inline std::vector<SupportedAction> standard_fixture_actions(
    std::shared_ptr<const LeftRestrictionMonoid> s, std::shared_ptr<const BooleanContext> ctx) {
  std::vector<SupportedAction> out;
  out.push_back(projection_action(s, true, ctx));
  for (int e : projections(*s)) out.push_back(principal_action(s, e, true, ctx).action);
  return out;
}

inline CategoryIsoReport check_category_iso(std::shared_ptr<const LeftRestrictionMonoid> s,
                                            const std::vector<SupportedAction>& fixtures,
                                            const SearchLimit& limit = {}) {
  auto ctx = require_boolean(*s);
  auto units = partial_units(*s);
  auto inv = inv_monoid(*s, units);
  auto etale = is_etale(*s, ctx, units, limit);
  if (!etale.etale) throw Error(Errc::not_etale, "the monoid is not etale");

  CategoryIsoReport report;
  if (fixtures.empty()) {
    report.vacuous = true;
    report.lines.push_back("warning: empty fixture set, vacuous pass");
    return report;
  }

  std::vector<SupportedAction> restricted;
  for (size_t i = 0; i < fixtures.size(); ++i) {
    const auto& a = fixtures[i];
    auto r = restrict_action(inv, a);
    auto inv_report = check_inv_supported(r, inv);
    if (!inv_report.ok()) {
      report.ok = false;
      report.lines.push_back("fixture " + std::to_string(i) + ": restriction fails Inv axioms");
      continue;
    }
    auto ext = extend_action(inv, r, a.S, ctx, etale, limit);
    if (!ext.independent) {
      report.ok = false;
      report.lines.push_back("fixture " + std::to_string(i) + ": extension depends on the decomposition");
      continue;
    }
    bool identical = ext.action.act == a.act && ext.action.support == a.support;
    if (!identical) {
      report.ok = false;
      report.lines.push_back("fixture " + std::to_string(i) + ": extend(restrict(A)) != A");
      continue;
    }
    report.lines.push_back("fixture " + std::to_string(i) + ": restrict/extend round trip is the identity");
    restricted.push_back(std::move(r));
  }

  // Hom sets coincide: an Inv-hom between restrictions is exactly an S-hom.
  for (size_t i = 0; i < restricted.size() && report.ok; ++i)
    for (size_t j = 0; j < restricted.size() && report.ok; ++j) {
      auto s_homs = enumerate_homs(fixtures[i], fixtures[j], limit);
      auto inv_homs = enumerate_homs(restricted[i], restricted[j], limit);
      if (s_homs != inv_homs) {
        report.ok = false;
        report.lines.push_back("hom sets differ between fixtures " + std::to_string(i) + " and " +
                               std::to_string(j));
      } else {
        report.lines.push_back("hom(" + std::to_string(i) + "," + std::to_string(j) +
                               "): " + std::to_string(s_homs.size()) + " maps on both sides");
      }
    }
  return report;
}

}  // namespace finrest
