#include <catch2/catch_amalgamated.hpp>

#include "finrest/generators.hpp"
#include "finrest/restriction.hpp"

using namespace finrest;

namespace {

// Partial maps on a 2-set, 0-based; value 2 means undefined.
const PartialMap kEmpty{2, 2};
const PartialMap kId{0, 1};
const PartialMap kSwap{1, 0};
const PartialMap kConst0{0, 0};
const PartialMap kConst1{1, 1};
const PartialMap kId0{0, 2};   // identity on {0}
const PartialMap kId1{2, 1};   // identity on {1}
const PartialMap kZeroTo1{1, 2};

// PT_2 restricted to the non-total maps plus the identity map: closed, but
// the singleton-domain non-identity maps have no total element above them.
SubLrm pt2_without_nonidentity_totals(const PtMonoid& p) {
  std::vector<int> subset;
  for (int a = 0; a < p.lrm.size(); ++a)
    if (!p.lrm.is_total(a) || a == p.lrm.identity()) subset.push_back(a);
  return induced_sub_lrm(p.lrm, subset);
}

}  // namespace

TEST_CASE("pt generator sizes match the counting oracles") {
  auto p2 = pt(2);
  CHECK(p2.lrm.size() == 9);  // (n+1)^n
  CHECK(static_cast<int>(projections(p2.lrm).size()) == 1 << 2);
  CHECK(static_cast<int>(totals(p2.lrm).size()) == 2 * 2);

  auto p3 = pt(3);
  CHECK(p3.lrm.size() == 64);
  CHECK(static_cast<int>(projections(p3.lrm).size()) == 1 << 3);
  CHECK(static_cast<int>(totals(p3.lrm).size()) == 27);
}

TEST_CASE("check_lrm validates the canonical models") {
  CHECK(check_lrm(pt(2).lrm).ok());
  CHECK(check_lrm(pt(3).lrm).ok());
  CHECK(check_lrm(sym_inv(2).lrm).ok());
  CHECK(check_lrm(powerset_lrm(2)).ok());
  CHECK(check_lrm(trivial_plus(cyclic_monoid(3))).ok());
  CHECK(check_lrm(trivial_plus(right_zero_monoid3())).ok());
}

TEST_CASE("redefining plus to the constant identity is the trivial plus") {
  // Constant plus does not break any LR axiom; it is the trivial structure.
  auto s = pt(2).lrm;
  s.plus.assign(s.size(), s.identity());
  s.zero.reset();
  CHECK(check_lrm(s).ok());
}

TEST_CASE("corrupting plus on the non-total maps breaks LR4") {
  auto p = pt(2);
  auto s = p.lrm;
  int e0 = p.index(kId0);
  for (int a = 0; a < s.size(); ++a)
    if (!s.is_total(a)) s.plus[a] = e0;
  s.zero.reset();
  auto report = check_lrm(s);
  REQUIRE_FALSE(report.ok());
  const auto* lr4 = report.find("LR4");
  REQUIRE(lr4 != nullptr);
  REQUIRE_FALSE(lr4->pass);
  // The witness re-verifies and is a non-total map.
  int w = lr4->witness[0];
  CHECK_FALSE(p.lrm.is_total(w));
  CHECK(s.mul(s.plus_of(w), w) != w);
}

TEST_CASE("projections and totals of a trivial-plus monoid") {
  auto s = trivial_plus(right_zero_monoid3());
  CHECK(projections(s) == std::vector<int>{s.identity()});
  CHECK(static_cast<int>(totals(s).size()) == s.size());
}

TEST_CASE("natural order") {
  auto p = pt(2);
  const auto& s = p.lrm;

  SECTION("reflexive") {
    for (int a = 0; a < s.size(); ++a) CHECK(natural_leq(s, a, a));
  }
  SECTION("restriction of a total map is below it") {
    int swap_r0 = p.index(kZeroTo1);  // swap restricted to {0}
    CHECK(natural_leq(s, swap_r0, p.index(kSwap)));
    CHECK_FALSE(natural_leq(s, p.index(kSwap), swap_r0));
  }
  SECTION("s <= t iff s = et for some projection e") {
    auto proj = projections(s);
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        bool via_proj = false;
        for (int e : proj)
          if (s.mul(e, b) == a) { via_proj = true; break; }
        CHECK(natural_leq(s, a, b) == via_proj);
      }
  }
  SECTION("monotone in plus") {
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        if (natural_leq(s, a, b)) CHECK(natural_leq(s, s.plus_of(a), s.plus_of(b)));
  }
}

TEST_CASE("right compatibility") {
  auto p = pt(2);
  const auto& s = p.lrm;

  for (int a = 0; a < s.size(); ++a) CHECK(right_compatible(s, a, a));
  for (int e : projections(s))
    for (int f : projections(s)) CHECK(right_compatible(s, e, f));

  SECTION("disjoint domains are right-orthogonal, hence compatible") {
    int a = p.index(kId0), b = p.index(PartialMap{2, 0});  // dom {0} vs dom {1}
    CHECK(s.mul(s.plus_of(a), s.plus_of(b)) == *s.zero);
    CHECK(right_orthogonal(s, a, b));
    CHECK(right_compatible(s, a, b));
  }
  SECTION("right-orthogonal implies right-compatible, exhaustively") {
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        if (right_orthogonal(s, a, b)) CHECK(right_compatible(s, a, b));
  }
}

TEST_CASE("joins in pt(2)") {
  auto p = pt(2);
  const auto& s = p.lrm;
  auto ctx = require_boolean(s);

  SECTION("idempotent") {
    for (int a = 0; a < s.size(); ++a) CHECK(join(s, a, a) == a);
  }
  SECTION("union of the singleton restrictions of a total map") {
    int swap0 = p.index(kZeroTo1);          // 0 -> 1
    int swap1 = p.index(PartialMap{2, 0});  // 1 -> 0
    CHECK(join(s, swap0, swap1) == p.index(kSwap));
  }
  SECTION("complementary projections join to the identity") {
    for (int e : projections(s)) {
      int c = ctx.comp_elt(e);
      REQUIRE(c >= 0);
      CHECK(join(s, e, c) == s.identity());
    }
  }
  SECTION("typed errors") {
    int c0 = p.index(kConst0), c1 = p.index(kConst1);
    REQUIRE_FALSE(right_compatible(s, c0, c1));
    CHECK_THROWS_AS(join(s, c0, c1), Error);
  }
  SECTION("join is the unique least upper bound") {
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b) {
        if (ctx.join[a][b] < 0) continue;
        int j = ctx.join[a][b];
        CHECK(natural_leq(s, a, j));
        CHECK(natural_leq(s, b, j));
        for (int u = 0; u < s.size(); ++u)
          if (natural_leq(s, a, u) && natural_leq(s, b, u)) CHECK(natural_leq(s, j, u));
      }
  }
}

TEST_CASE("check_boolean_lrm") {
  SECTION("pt(2) passes all Boolean axioms") {
    auto report = check_boolean_lrm(pt(2).lrm);
    CHECK(report.ok());
  }
  SECTION("powerset algebra as an LRM passes") {
    CHECK(check_boolean_lrm(powerset_lrm(2)).ok());
    CHECK(check_boolean_lrm(powerset_lrm(3)).ok());
  }
  SECTION("trivial-plus monoid with more than one element fails B1") {
    auto s = trivial_plus(cyclic_monoid(2));
    auto report = check_boolean_lrm(s);
    REQUIRE_FALSE(report.ok());
    CHECK_FALSE(report.find("B1.zero_projection")->pass);
  }
  SECTION("sym_inv(2) is not Boolean: a right-compatible pair without a join") {
    auto report = check_boolean_lrm(sym_inv(2).lrm);
    REQUIRE_FALSE(report.ok());
    const auto* b2 = report.find("B2.join_exists");
    REQUIRE(b2 != nullptr);
    REQUIRE_FALSE(b2->pass);
    // The witness re-verifies: compatible, but no upper bound is least.
    const auto& s = sym_inv(2).lrm;
    CHECK(right_compatible(s, b2->witness[0], b2->witness[1]));
    CHECK_FALSE(join_scan(s, b2->witness[0], b2->witness[1]).has_value());
  }
}

TEST_CASE("factorizability") {
  auto p = pt(2);

  SECTION("Boolean monoids are factorizable") {
    CHECK(is_factorizable(p.lrm).factorizable);
    CHECK(is_factorizable(powerset_lrm(2)).factorizable);
  }
  SECTION("trivial-plus monoids are factorizable") {
    CHECK(is_factorizable(trivial_plus(right_zero_monoid3())).factorizable);
  }
  SECTION("removing the non-identity totals breaks factorizability") {
    auto sub = pt2_without_nonidentity_totals(p);
    REQUIRE(check_lrm(sub.lrm).ok());
    auto r = is_factorizable(sub.lrm);
    REQUIRE_FALSE(r.factorizable);
    // The witness is a singleton-domain non-identity map.
    CHECK_FALSE(sub.lrm.is_projection(r.witness));
  }
}

TEST_CASE("factorizable_part") {
  auto p = pt(2);

  SECTION("of a factorizable monoid is everything") {
    CHECK(factorizable_part(p.lrm).elements.size() == 9);
    auto t = trivial_plus(cyclic_monoid(3));
    CHECK(static_cast<int>(factorizable_part(t).elements.size()) == t.size());
  }
  SECTION("of the truncated monoid is the projection sub-monoid") {
    auto sub = pt2_without_nonidentity_totals(p);
    auto part = factorizable_part(sub.lrm);
    REQUIRE(check_lrm(part.lrm).ok());
    CHECK(part.elements.size() == 4);
    for (int i = 0; i < static_cast<int>(part.elements.size()); ++i)
      CHECK(part.lrm.is_projection(i));
  }
}

TEST_CASE("total_cover") {
  auto p = pt(2);
  const auto& s = p.lrm;
  auto ctx = require_boolean(s);

  SECTION("of a total element is itself") {
    for (int a : totals(s)) CHECK(total_cover(s, ctx, a) == a);
  }
  SECTION("of zero is the identity") { CHECK(total_cover(s, ctx, *s.zero) == s.identity()); }
  SECTION("of a singleton-domain map extends it by a fixed point") {
    CHECK(total_cover(s, ctx, p.index(kZeroTo1)) == p.index(kConst1));
  }
  SECTION("covers are total and above") {
    for (int a = 0; a < s.size(); ++a) {
      int c = total_cover(s, ctx, a);
      CHECK(s.is_total(c));
      CHECK(natural_leq(s, a, c));
      CHECK(s.mul(s.plus_of(a), c) == a);
    }
  }
}

TEST_CASE("check_lrm_hom") {
  auto p = pt(2);
  const auto& s = p.lrm;

  SECTION("identity map is a homomorphism") {
    std::vector<int> id(s.size());
    for (int i = 0; i < s.size(); ++i) id[i] = i;
    CHECK(check_lrm_hom(s, s, id).ok);
    CHECK(check_lrm_hom(s, s, id, /*boolean_mode=*/true).ok);
  }
  SECTION("collapse of a trivial-plus monoid to the trivial monoid") {
    auto src = trivial_plus(right_zero_monoid3());
    auto dst = trivial_plus(cyclic_monoid(1));
    std::vector<int> theta(src.size(), 0);
    CHECK(check_lrm_hom(src, dst, theta).ok);
  }
  SECTION("inclusion of the partial injections into pt(2)") {
    std::vector<int> inj;
    for (int a = 0; a < s.size(); ++a)
      if (pt_injective(p.maps[a], 2)) inj.push_back(a);
    auto sub = induced_sub_lrm(s, inj);
    REQUIRE(sub.elements.size() == 7);
    CHECK(check_lrm_hom(sub.lrm, s, sub.elements).ok);
  }
  SECTION("a broken map is rejected with a witness") {
    std::vector<int> theta(s.size());
    for (int i = 0; i < s.size(); ++i) theta[i] = i;
    theta[p.index(kSwap)] = p.index(kId);
    auto hc = check_lrm_hom(s, s, theta);
    REQUIRE_FALSE(hc.ok);
    CHECK_FALSE(hc.witness.empty());
  }
}

TEST_CASE("boolean context of the powerset LRM matches the powerset algebra") {
  auto s = powerset_lrm(2);
  auto ctx = require_boolean(s);
  auto b = powerset(2);
  REQUIRE(ctx.proj.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(ctx.algebra.complement[i] == b.complement[i]);
    for (int j = 0; j < 4; ++j) {
      CHECK(ctx.algebra.join[i][j] == b.join[i][j]);
      CHECK(ctx.algebra.meet_of(i, j) == b.meet_of(i, j));
    }
  }
}
