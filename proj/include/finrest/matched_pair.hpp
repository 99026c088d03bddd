#pragma once

// Matched pairs [E|M]: a meet semilattice (or Boolean algebra) E, a monoid M,
// an action M x E -> E written m * e, and a family of right congruences on M
// indexed by E. Extraction from a left restriction monoid uses
//   m * e = (me)+        and        m ~e n  iff  em = en,
// and conversely every matched pair builds a factorizable left restriction
// monoid S[E|M] on the pairs (e, [m]_e).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finrest/core.hpp"
#include "finrest/report.hpp"
#include "finrest/restriction.hpp"

namespace finrest {

// Boolean extension of a semilattice (bottom, join, complement tables).
struct BooleanStructure {
  int bottom = 0;
  Table join;
  std::vector<int> complement;
};

struct MatchedPair {
  Semilattice E;
  std::optional<BooleanStructure> boolean_e;
  FiniteMonoid M;
  Table act;                    // act[m][e], an E index
  std::vector<Partition> cong;  // cong[e], a partition of M

  bool is_boolean() const { return boolean_e.has_value(); }
  int e_size() const { return E.size(); }
  int m_size() const { return M.size; }
  int top() const { return E.top(); }
  int star(int m, int e) const { return act[m][e]; }
  bool cong_same(int e, int m, int n) const { return cong[e].same(m, n); }

  BooleanAlgebra algebra() const {
    if (!boolean_e) throw Error(Errc::not_boolean, "matched pair has no Boolean structure");
    BooleanAlgebra b;
    b.lattice = E;
    b.bottom = boolean_e->bottom;
    b.join = boolean_e->join;
    b.complement = boolean_e->complement;
    return b;
  }
};

inline void validate_matched_pair_shape(const MatchedPair& p) {
  validate_monoid_shape(p.E.meet);
  validate_monoid_shape(p.M);
  validate_table(p.act, p.m_size(), p.e_size(), p.e_size(), "matched pair action");
  if (static_cast<int>(p.cong.size()) != p.e_size())
    fail_structural("matched pair: congruence family must have one partition per E element");
  for (int e = 0; e < p.e_size(); ++e) validate_partition_shape(p.cong[e], p.m_size());
  if (p.boolean_e) {
    BooleanAlgebra b;
    b.lattice = p.E;
    b.bottom = p.boolean_e->bottom;
    b.join = p.boolean_e->join;
    b.complement = p.boolean_e->complement;
    validate_boolean_algebra_shape(b);
  }
}

// ---------------------------------------------------------------------------
// Axiom suites (MP1)-(MP8) and the Boolean additions (MP9)-(MP12).

inline std::vector<NamedAxiom> matched_pair_axioms(const MatchedPair& p) {
  int ne = p.e_size(), nm = p.m_size();
  int idm = p.M.identity, top = p.top();
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("MP1.identity_action", {ne}, [&p, idm](const std::vector<int>& t) {
    return p.star(idm, t[0]) != t[0];
  }));
  axs.push_back(make_axiom("MP1.composition", {nm, nm, ne}, [&p](const std::vector<int>& t) {
    return p.star(p.M.mul(t[0], t[1]), t[2]) != p.star(t[0], p.star(t[1], t[2]));
  }));
  axs.push_back(make_axiom("MP2", {nm}, [&p, top](const std::vector<int>& t) {
    return p.star(t[0], top) != top;
  }));
  axs.push_back(make_axiom("MP3", {nm, ne, ne}, [&p](const std::vector<int>& t) {
    return p.star(t[0], p.E.meet_of(t[1], t[2])) !=
           p.E.meet_of(p.star(t[0], t[1]), p.star(t[0], t[2]));
  }));
  axs.push_back(make_axiom("MP4.right_congruence", {ne, nm, nm, nm}, [&p](const std::vector<int>& t) {
    return p.cong_same(t[0], t[1], t[2]) &&
           !p.cong_same(t[0], p.M.mul(t[1], t[3]), p.M.mul(t[2], t[3]));
  }));
  axs.push_back(make_axiom("MP5.identity_congruence", {nm, nm}, [&p, top](const std::vector<int>& t) {
    return t[0] != t[1] && p.cong_same(top, t[0], t[1]);
  }));
  axs.push_back(make_axiom("MP6.refinement", {ne, ne, nm, nm}, [&p](const std::vector<int>& t) {
    return p.E.leq(t[1], t[0]) && p.cong_same(t[0], t[2], t[3]) && !p.cong_same(t[1], t[2], t[3]);
  }));
  axs.push_back(make_axiom("MP7", {ne, nm, nm, nm}, [&p](const std::vector<int>& t) {
    int e = t[0], a = t[1], a2 = t[2], m = t[3];
    return p.cong_same(e, a, a2) &&
           !p.cong_same(p.star(m, e), p.M.mul(m, a), p.M.mul(m, a2));
  }));
  axs.push_back(make_axiom("MP8", {ne, nm, nm, ne}, [&p](const std::vector<int>& t) {
    int e = t[0], a = t[1], a2 = t[2], f = t[3];
    return p.cong_same(e, a, a2) &&
           p.E.meet_of(e, p.star(a, f)) != p.E.meet_of(e, p.star(a2, f));
  }));
  return axs;
}

inline std::vector<NamedAxiom> boolean_matched_pair_axioms(const MatchedPair& p) {
  int ne = p.e_size(), nm = p.m_size();
  const BooleanStructure& b = *p.boolean_e;
  std::vector<NamedAxiom> axs;
  axs.push_back(make_axiom("MP9.universal", {nm}, [&p, &b](const std::vector<int>& t) {
    return !p.cong_same(b.bottom, t[0], 0);
  }));
  axs.push_back(make_axiom("MP10.join_action", {nm, ne, ne}, [&p, &b](const std::vector<int>& t) {
    return p.star(t[0], b.join[t[1]][t[2]]) != b.join[p.star(t[0], t[1])][p.star(t[0], t[2])];
  }));
  // Nullary case of the join preservation: without it the bottom class of
  // the built monoid need not be right-absorbing.
  axs.push_back(make_axiom("MP10.zero_action", {nm}, [&p, &b](const std::vector<int>& t) {
    return p.star(t[0], b.bottom) != b.bottom;
  }));
  axs.push_back(make_axiom("MP11.gluing", {ne, ne, nm, nm}, [&p, &b](const std::vector<int>& t) {
    return p.cong_same(t[0], t[2], t[3]) && p.cong_same(t[1], t[2], t[3]) &&
           !p.cong_same(b.join[t[0]][t[1]], t[2], t[3]);
  }));
  axs.push_back(make_axiom(
      "MP12.interpolation", {nm, nm, ne},
      [&p, &b](const std::vector<int>& t) {
        int m = t[0], n = t[1], e = t[2], ec = b.complement[e];
        for (int q = 0; q < p.m_size(); ++q)
          if (p.cong_same(e, q, m) && p.cong_same(ec, q, n)) return false;
        return true;
      },
      [](const std::vector<int>& t) {
        return "no interpolant for m=" + std::to_string(t[0]) + " n=" + std::to_string(t[1]) +
               " e=" + std::to_string(t[2]);
      }));
  return axs;
}

inline AxiomReport check_matched_pair(const MatchedPair& p, const std::string& name = "matched_pair") {
  validate_matched_pair_shape(p);
  return run_axioms(name, matched_pair_axioms(p));
}

inline AxiomReport check_boolean_matched_pair(const MatchedPair& p,
                                              const std::string& name = "boolean_matched_pair") {
  validate_matched_pair_shape(p);
  if (!p.boolean_e) throw Error(Errc::not_boolean, "matched pair carries no Boolean structure");
  return run_axioms(name, boolean_matched_pair_axioms(p));
}

// ---------------------------------------------------------------------------
// Extraction from a left restriction monoid.

// Retains how pair indices embed into the source monoid.
struct ExtractedPair {
  MatchedPair pair;
  std::vector<int> proj_elements;   // E index -> S element
  std::vector<int> total_elements;  // M index -> S element
  std::vector<int> e_index;         // S element -> E index or -1
  std::vector<int> m_index;         // S element -> M index or -1
};

inline ExtractedPair from_lrm(const LeftRestrictionMonoid& s, bool boolean_mode = false) {
  validate_lrm_shape(s);
  ExtractedPair out;
  out.proj_elements = projections(s);
  out.total_elements = totals(s);
  out.e_index.assign(s.size(), -1);
  out.m_index.assign(s.size(), -1);
  int ne = static_cast<int>(out.proj_elements.size());
  int nm = static_cast<int>(out.total_elements.size());
  for (int i = 0; i < ne; ++i) out.e_index[out.proj_elements[i]] = i;
  for (int i = 0; i < nm; ++i) out.m_index[out.total_elements[i]] = i;

  MatchedPair& p = out.pair;
  p.E.meet.size = ne;
  p.E.meet.identity = out.e_index[s.identity()];
  p.E.meet.mult.assign(ne, std::vector<int>(ne, 0));
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j)
      p.E.meet.mult[i][j] = out.e_index[s.mul(out.proj_elements[i], out.proj_elements[j])];

  p.M.size = nm;
  p.M.identity = out.m_index[s.identity()];
  p.M.mult.assign(nm, std::vector<int>(nm, 0));
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j)
      p.M.mult[i][j] = out.m_index[s.mul(out.total_elements[i], out.total_elements[j])];

  p.act.assign(nm, std::vector<int>(ne, 0));
  for (int m = 0; m < nm; ++m)
    for (int e = 0; e < ne; ++e)
      p.act[m][e] = out.e_index[s.plus_of(s.mul(out.total_elements[m], out.proj_elements[e]))];

  p.cong.reserve(ne);
  for (int e = 0; e < ne; ++e) {
    int pe = out.proj_elements[e];
    p.cong.push_back(partition_by(nm, [&](int m) { return s.mul(pe, out.total_elements[m]); }));
  }

  if (boolean_mode) {
    auto ctx = require_boolean(s);
    BooleanStructure b;
    b.bottom = ctx.algebra.bottom;
    b.join = ctx.algebra.join;
    b.complement = ctx.algebra.complement;
    p.boolean_e = std::move(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The construction S[E|M].

// Elements are pairs (e, r) with r the least representative of a cong[e]
// class, ordered lexicographically.
struct BuiltLrm {
  LeftRestrictionMonoid lrm;
  std::vector<std::pair<int, int>> elements;  // built index -> (e, class rep)
  Table pair_index;                           // e x m -> built index of (e, [m]_e)

  int index_of(int e, int m) const { return pair_index[e][m]; }
};

inline BuiltLrm build_lrm(const MatchedPair& p) {
  validate_matched_pair_shape(p);
  BuiltLrm out;
  int ne = p.e_size(), nm = p.m_size();
  out.pair_index.assign(ne, std::vector<int>(nm, -1));
  for (int e = 0; e < ne; ++e)
    for (int r : p.cong[e].representatives()) {
      int idx = static_cast<int>(out.elements.size());
      out.elements.emplace_back(e, r);
      for (int m = 0; m < nm; ++m)
        if (p.cong[e].block[m] == r) out.pair_index[e][m] = idx;
    }
  int n = static_cast<int>(out.elements.size());
  if (n > kMaxElements) throw Error(Errc::size_cap, "built monoid exceeds the element cap");

  LeftRestrictionMonoid& s = out.lrm;
  s.monoid.size = n;
  s.monoid.identity = out.index_of(p.top(), p.M.identity);
  s.monoid.mult.assign(n, std::vector<int>(n, 0));
  s.plus.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    auto [e, a] = out.elements[i];
    s.plus[i] = out.index_of(e, p.M.identity);
    for (int j = 0; j < n; ++j) {
      auto [f, b] = out.elements[j];
      int g = p.E.meet_of(e, p.star(a, f));
      s.monoid.mult[i][j] = out.index_of(g, p.M.mul(a, b));
    }
  }
  if (p.boolean_e) s.zero = out.index_of(p.boolean_e->bottom, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Interpolation witnesses.

// Least q with q ~e m and q ~ebar n.
inline int mp12_witness(const MatchedPair& p, int m, int n, int e) {
  if (!p.boolean_e) throw Error(Errc::not_boolean, "mp12_witness requires a Boolean pair");
  int ec = p.boolean_e->complement[e];
  for (int q = 0; q < p.m_size(); ++q)
    if (p.cong_same(e, q, m) && p.cong_same(ec, q, n)) return q;
  throw Error(Errc::no_witness, "no interpolant exists (MP12 fails)");
}

// Least q with q ~e m and q ~f n, given m ~ef n. Also certifies that the
// route through mp12_witness lands on a valid interpolant and that all
// interpolants agree up to ~(e+f).
inline int interpolate(const MatchedPair& p, int m, int n, int e, int f) {
  if (!p.boolean_e) throw Error(Errc::not_boolean, "interpolate requires a Boolean pair");
  int ef = p.E.meet_of(e, f);
  if (!p.cong_same(ef, m, n))
    throw Error(Errc::precondition, "interpolate requires m ~ef n");
  int via_mp12 = mp12_witness(p, m, n, e);
  if (!p.cong_same(e, via_mp12, m) || !p.cong_same(f, via_mp12, n))
    throw Error(Errc::no_witness, "mp12 route failed to interpolate");
  int least = -1;
  int ejf = p.boolean_e->join[e][f];
  for (int q = 0; q < p.m_size(); ++q) {
    if (!p.cong_same(e, q, m) || !p.cong_same(f, q, n)) continue;
    if (least < 0) least = q;
    if (!p.cong_same(ejf, q, least))
      throw Error(Errc::no_witness, "interpolant not unique up to the join congruence");
  }
  return least;
}

// ---------------------------------------------------------------------------
// Homomorphisms of matched pairs.

struct MpHom {
  std::vector<int> alpha;  // M -> M'
  std::vector<int> beta;   // E -> E'
};

inline HomCheck check_mp_hom(const MatchedPair& p, const MatchedPair& q, const MpHom& h) {
  validate_vector(h.alpha, p.m_size(), q.m_size(), "mp hom alpha");
  validate_vector(h.beta, p.e_size(), q.e_size(), "mp hom beta");
  HomCheck out;
  auto fail = [&out](const std::string& cond, std::vector<int> w) {
    out.ok = false;
    out.condition = cond;
    out.witness = std::move(w);
  };
  if (h.alpha[p.M.identity] != q.M.identity) {
    fail("alpha_identity", {p.M.identity});
    return out;
  }
  for (int a = 0; a < p.m_size(); ++a)
    for (int b = 0; b < p.m_size(); ++b)
      if (h.alpha[p.M.mul(a, b)] != q.M.mul(h.alpha[a], h.alpha[b])) {
        fail("alpha_multiplicative", {a, b});
        return out;
      }
  if (h.beta[p.top()] != q.top()) {
    fail("beta_top", {p.top()});
    return out;
  }
  for (int e = 0; e < p.e_size(); ++e)
    for (int f = 0; f < p.e_size(); ++f)
      if (h.beta[p.E.meet_of(e, f)] != q.E.meet_of(h.beta[e], h.beta[f])) {
        fail("beta_meet", {e, f});
        return out;
      }
  if (p.is_boolean() && q.is_boolean()) {
    const auto& pb = *p.boolean_e;
    const auto& qb = *q.boolean_e;
    if (h.beta[pb.bottom] != qb.bottom) {
      fail("beta_bottom", {pb.bottom});
      return out;
    }
    for (int e = 0; e < p.e_size(); ++e) {
      if (h.beta[pb.complement[e]] != qb.complement[h.beta[e]]) {
        fail("beta_complement", {e});
        return out;
      }
      for (int f = 0; f < p.e_size(); ++f)
        if (h.beta[pb.join[e][f]] != qb.join[h.beta[e]][h.beta[f]]) {
          fail("beta_join", {e, f});
          return out;
        }
    }
  }
  for (int m = 0; m < p.m_size(); ++m)
    for (int e = 0; e < p.e_size(); ++e)
      if (h.beta[p.star(m, e)] != q.star(h.alpha[m], h.beta[e])) {
        fail("action", {m, e});
        return out;
      }
  for (int e = 0; e < p.e_size(); ++e)
    for (int m = 0; m < p.m_size(); ++m)
      for (int n = 0; n < p.m_size(); ++n)
        if (p.cong_same(e, m, n) && !q.cong_same(h.beta[e], h.alpha[m], h.alpha[n])) {
          fail("congruence", {e, m, n});
          return out;
        }
  return out;
}

// The induced map S[E|M] -> S[E'|M']: (e,[a]) -> (beta(e), [alpha(a)]).
inline std::vector<int> hom_to_lrm_hom(const MatchedPair& p, const MatchedPair& q, const MpHom& h,
                                       const BuiltLrm& sp, const BuiltLrm& sq) {
  auto hc = check_mp_hom(p, q, h);
  if (!hc.ok)
    throw Error(Errc::precondition, "not a matched-pair homomorphism (" + hc.condition + ")");
  std::vector<int> theta(sp.elements.size());
  for (size_t i = 0; i < sp.elements.size(); ++i) {
    auto [e, a] = sp.elements[i];
    theta[i] = sq.index_of(h.beta[e], h.alpha[a]);
  }
  return theta;
}

// ---------------------------------------------------------------------------
// Reconstruction: a factorizable monoid is isomorphic to S[Proj|Tot].

struct Reconstruction {
  ExtractedPair extracted;
  BuiltLrm built;
  std::vector<int> theta;  // S index -> built index
};

inline Reconstruction reconstruction_iso(const LeftRestrictionMonoid& s, bool boolean_mode = false) {
  auto fact = is_factorizable(s);
  if (!fact.factorizable)
    throw Error(Errc::not_factorizable,
                "element " + std::to_string(fact.witness) + " is below no total element");
  Reconstruction out;
  out.extracted = from_lrm(s, boolean_mode);
  out.built = build_lrm(out.extracted.pair);
  out.theta.assign(s.size(), -1);
  for (int a = 0; a < s.size(); ++a) {
    int cover = *least_total_above(s, a);
    // The image does not depend on the chosen total: all totals above a
    // multiply a+ back to a, hence share a class at a+.
    int e = out.extracted.e_index[s.plus_of(a)];
    int m = out.extracted.m_index[cover];
    for (int t = 0; t < s.size(); ++t) {
      if (!s.is_total(t) || !natural_leq(s, a, t)) continue;
      if (s.mul(s.plus_of(a), t) != a ||
          !out.extracted.pair.cong_same(e, m, out.extracted.m_index[t]))
        throw Error(Errc::precondition, "totals above an element disagree at its support");
    }
    out.theta[a] = out.built.index_of(e, m);
  }
  return out;
}

}  // namespace finrest
